#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgc/count.hpp"
#include "dgc/hilbert.hpp"
#include "dgc/polynomial.hpp"

namespace dgc {

/// Raised when an input violates a run's hypothesis (e.g. the conjecture
/// harness fed a curve whose top form has a linear factor). Maps to CLI
/// exit code 2.
class hypothesis_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::vector<long> B_list;
    std::uint64_t seed = 1;
    std::map<std::string, double> calibration;  // c, e, kappa, prop21_C
    double tolerance = 1e-9;
    int workers = 1;
    bool include_timings = false;  // off by default so outputs are byte-stable

    double calib(const std::string& name, double fallback) const;
    void validate() const;  // B_list strictly increasing, tolerance > 0

    static ExperimentConfig defaults();
    static ExperimentConfig from_json_file(const std::string& path);
};

struct SweepMeta {
    int d = 0;
    int n = 0;
    std::optional<bool> ncc;          // defined for n >= 3
    bool irreducible = false;
    bool top_form_1_irreducible = false;
    bool top_form_2_irreducible = false;
};

struct SweepResult {
    std::string instance;  // canonical polynomial text
    std::vector<CountRecord> records;
    std::optional<double> fitted_exponent;
    SweepMeta meta;
    bool conjecture_evidence = false;
};

struct HilbertSweepResult {
    std::string instance;
    std::vector<SpecializationReport> reports;
    std::optional<double> fitted_exponent;
};

struct InstanceConstraints {
    bool ncc = false;
    bool irreducible = false;
    bool top_form_1_irreducible = false;
    bool top_form_2_irreducible = false;
};

/// Rejection-sample an integer polynomial of degree exactly d with
/// coefficients in [-coeff_bound, coeff_bound], deterministic in seed,
/// until the requested constraint checks pass. Throws search_exhausted when
/// the attempt budget runs out.
Polynomial random_instance(int n, int d, long coeff_bound, const InstanceConstraints& constraints,
                           std::uint64_t seed, int budget = 1000);

/// Least-squares slope of ln(count) against ln(B) over records with positive
/// count; throws when fewer than two such records (or fewer than two
/// distinct B) exist.
double fit_exponent(const std::vector<CountRecord>& records);

SweepResult sweep(const Polynomial& f, const ExperimentConfig& config);

/// Curve harness for conjecture evidence: n must equal 2 and the top form
/// must be 1-irreducible, otherwise hypothesis_violation names the factor.
SweepResult conjecture13_run(const Polynomial& f, const ExperimentConfig& config);

HilbertSweepResult hilbert_sweep(const Polynomial& F, const std::vector<long>& Bprime_list,
                                 const ExperimentConfig& config);

// serialization (schema dgl/1); counts exact, bounds as decimal strings
std::string sweep_to_json(const SweepResult& r, bool include_timings);
std::string sweep_to_csv(const SweepResult& r, bool include_timings);
std::string hilbert_to_json(const HilbertSweepResult& r);
std::string hilbert_to_csv(const HilbertSweepResult& r);

}  // namespace dgc
