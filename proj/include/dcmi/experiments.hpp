#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcmi/distributions.hpp"

namespace dcmi {

/// Parse `start:stop:step` into a strictly increasing grid. Throws InputError.
std::vector<double> parse_grid(const std::string& expr);

/// Replicated sweep over one distribution parameter (or the sample size).
struct SweepSpec {
    Family family = Family::gaussian_pair;
    std::string param = "ym";          ///< "ym" | "sigma" | "a" | "n"
    std::vector<double> grid;
    std::size_t replicates = 100;
    std::size_t pairs = 1000;          ///< n per dataset (ignored when param == "n")
    std::uint64_t base_seed = 0;
    double factor = 1.06;
    double y_m = 1.0;                  ///< fixed value when not swept
    double sigma_g = 1.0;
    double a = 1.0;

    void validate() const;             ///< throws InputError
};

struct SweepPoint {
    double param = 0.0;
    double mean_mi = 0.0;
    double std_mi = 0.0;       ///< divisor replicates-1 (0 for a single replicate)
    double analytic_mi = 0.0;  ///< quadrature oracle on the exact densities
    double null_mean = 0.0;    ///< over matched independent samples
    double null_std = 0.0;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepPoint> points;  ///< aligned with spec.grid
};

/// For each grid value: build the distribution, draw `replicates` dependent
/// and matched independent datasets on derived streams, estimate MI on each,
/// aggregate mean/std in replicate order, and attach the quadrature oracle.
/// Replicates may run in parallel; results are scheduling-independent.
SweepResult run_sweep(const SweepSpec& spec);

/// Sample-size study at fixed Gaussian parameters, one sweep per
/// (y_m, sigma_g) setting. Grid values are dataset sizes (all >= 50).
std::vector<SweepResult> run_size_study(const SweepSpec& base,
                                        std::span<const std::pair<double, double>> settings);
std::vector<SweepResult> run_size_study(const SweepSpec& base);

/// Root-search (bisection on the quadrature oracle) for the uniform offset
/// y_m whose exact MI equals `target` at width a; used to reconstruct the
/// unreported uniform benchmark setting.
double uniform_ym_for_target_mi(double target, double a = 1.0);

struct Table1Row {
    std::string family;
    double y_m = 0.0;
    double sigma_g = 0.0;
    double a = 0.0;
    double mi = 0.0;
    double null_mean = 0.0;
    double null_std = 0.0;
    double z = 0.0;
    double analytic_mi = 0.0;
};

struct Table1Result {
    std::vector<Table1Row> rows;
    std::uint64_t seed = 0;
    double factor = 1.06;
    double uniform_ym = 0.0;  ///< reconstructed offset used in the uniform row
};

/// One 1000-pair sample per family (gaussian y_m=5 sigma=1; uniform with the
/// reconstructed y_m at a=1; exponential), each with the 100-surrogate
/// significance protocol.
Table1Result run_table1(std::uint64_t seed, double factor = 1.06);

} // namespace dcmi
