#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgc/polynomial.hpp"

namespace dgc {

/// Affine rational line base + t*direction in canonical form: direction is
/// primitive with positive first nonzero entry; base is the point of the
/// line minimizing the max-norm, ties broken by lexicographic minimality.
/// Two Line values are equal iff they describe the same point set.
class Line {
public:
    Line(std::vector<Rat> base, std::vector<Int> direction);

    const std::vector<Rat>& base() const { return base_; }
    const std::vector<Int>& direction() const { return dir_; }
    int nvars() const { return static_cast<int>(dir_.size()); }

    /// max-norm of the primitive direction
    Int direction_height() const;

    bool operator==(const Line& o) const { return base_ == o.base_ && dir_ == o.dir_; }
    bool operator<(const Line& o) const;

    std::string to_string() const;

private:
    std::vector<Rat> base_;
    std::vector<Int> dir_;
};

/// One observation of a B-sweep.
struct CountRecord {
    long B = 0;
    Int count = 0;
    Int sz_bound = 0;
    long elapsed_ms = 0;
};

/// All integer points of f = 0 in [-B, B]^n, lexicographically sorted.
/// The first n-1 coordinates are enumerated and the last is solved exactly
/// from the univariate residual; identically-zero residuals emit the whole
/// fiber.
std::vector<std::vector<Int>> enumerate_points(const Polynomial& f, long B);

/// Count of the above without materializing the list. workers > 1 splits
/// the outer coordinate range; the result is identical to single-threaded.
Int count_points(const Polynomial& f, long B, int workers = 1);

/// Projective points of a homogeneous f with a primitive representative in
/// the box, identified antipodally via a positive first nonzero coordinate.
Int count_projective(const Polynomial& f, long B);

/// The Schwartz-Zippel bound d * (2B+1)^m for pure dimension m, degree d.
Int schwartz_zippel_bound(int d, int m, long B);

/// Exact number of integer points of L in [-B, B]^n.
Int count_on_line(const Line& L, long B);

/// A one-parameter family of lines in a fixed direction: every rational
/// point of base_curve (in the two transversal coordinates) is the base of
/// a line on the surface.
struct RulingFamily {
    std::vector<Int> direction;
    int transversal_coordinate;  // 0-based index held at zero by the bases
    Polynomial base_curve;       // bivariate, in the two free coordinates

    std::string to_string() const;
};

struct LineSearchResult {
    std::vector<Line> lines;            // isolated lines, canonically sorted
    std::vector<RulingFamily> families; // underdetermined direction classes
};

/// All affine lines on V(f) (f in 3 variables) whose primitive direction v
/// has f_d(v) = 0 and height <= dir_height_bound. Directions whose base
/// system is underdetermined are reported as ruling families.
LineSearchResult find_lines_on_surface(const Polynomial& f, int dir_height_bound);

enum class CurveBoundKind { Affine, Projective };

/// Comparator evaluations (never certified bounds): affine
/// C*d^3*B^(1/d)*(ln B + d), projective C*d^2*B^(2/d)*(ln B)^kappa.
double curve_bound(int d, long B, CurveBoundKind kind, double C, double kappa = 1.0);

}  // namespace dgc
