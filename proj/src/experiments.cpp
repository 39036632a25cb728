#include "dcmi/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "dcmi/errors.hpp"
#include "dcmi/mi.hpp"
#include "dcmi/rng.hpp"
#include "dcmi/significance.hpp"

namespace dcmi {

namespace {

constexpr std::pair<double, double> kSizeStudySettings[] = {
    {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}};

std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1.0))};
}

double parse_number(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw InputError("grid: cannot parse number `" + std::string(text) + "`");
    }
    return v;
}

BenchmarkDistribution make_distribution(const SweepSpec& spec, double swept) {
    double y_m = spec.y_m, sigma = spec.sigma_g, a = spec.a;
    if (spec.param == "ym") y_m = swept;
    if (spec.param == "sigma") sigma = swept;
    if (spec.param == "a") a = swept;
    switch (spec.family) {
        case Family::gaussian_pair: return BenchmarkDistribution::gaussian(y_m, sigma);
        case Family::uniform_pair: return BenchmarkDistribution::uniform(y_m, a);
        case Family::exponential_pair: return BenchmarkDistribution::exponential();
    }
    throw InputError("sweep: unknown family");
}

} // namespace

std::vector<double> parse_grid(const std::string& expr) {
    const auto c1 = expr.find(':');
    const auto c2 = expr.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw InputError("grid: expected `start:stop:step`, got `" + expr + "`");
    }
    const double start = parse_number(std::string_view(expr).substr(0, c1));
    const double stop = parse_number(std::string_view(expr).substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_number(std::string_view(expr).substr(c2 + 1));
    if (!(step > 0.0) || stop < start) {
        throw InputError("grid: `" + expr + "` does not describe an increasing sequence");
    }
    std::vector<double> grid;
    const double slack = step * 1e-9;
    for (std::size_t k = 0;; ++k) {
        const double v = start + step * static_cast<double>(k);
        if (v > stop + slack) break;
        grid.push_back(v);
    }
    return grid;
}

void SweepSpec::validate() const {
    if (grid.empty()) {
        throw InputError("sweep: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw InputError("sweep: grid must be strictly increasing");
        }
    }
    if (replicates < 1) {
        throw InputError("sweep: replicates must be at least 1");
    }
    if (param != "ym" && param != "sigma" && param != "a" && param != "n") {
        throw InputError("sweep: unknown parameter `" + param + "`");
    }
    if (param == "n") {
        for (double v : grid) {
            if (v < 50.0 || v != std::floor(v)) {
                throw InputError("sweep: n grid values must be integers >= 50");
            }
        }
    } else if (pairs < 1) {
        throw InputError("sweep: pairs must be at least 1");
    }
    if (!(factor > 0.0)) {
        throw InputError("sweep: bandwidth factor must be positive");
    }
    if (param == "sigma" && family != Family::gaussian_pair) {
        throw InputError("sweep: only the gaussian family has a sigma parameter");
    }
    if (param == "a" && family != Family::uniform_pair) {
        throw InputError("sweep: only the uniform family has a width parameter");
    }
    if (param == "ym" && family == Family::exponential_pair) {
        throw InputError("sweep: the exponential family has no sweepable parameters");
    }
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult res{spec, {}};
    res.points.resize(spec.grid.size());

    for (std::size_t g = 0; g < spec.grid.size(); ++g) {
        const double swept = spec.grid[g];
        const BenchmarkDistribution dist = make_distribution(spec, swept);
        const std::size_t n_pairs =
            spec.param == "n" ? static_cast<std::size_t>(std::llround(swept)) : spec.pairs;
        const std::uint64_t grid_seed = derive_stream(spec.base_seed, g);

        std::vector<double> dep(spec.replicates, 0.0);
        std::vector<double> ind(spec.replicates, 0.0);
        std::vector<std::string> errors(spec.replicates);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(spec.replicates); ++r) {
            const auto i = static_cast<std::size_t>(r);
            try {
                const auto ds = dist.sample(n_pairs, derive_stream(grid_seed, 2 * i));
                dep[i] = estimate_mi(ds, spec.factor).mi_nats;
                const auto null_ds =
                    dist.sample_independent(n_pairs, derive_stream(grid_seed, 2 * i + 1));
                ind[i] = estimate_mi(null_ds, spec.factor).mi_nats;
            } catch (const std::exception& e) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "grid value %g, replicate %zu: ", swept, i);
                errors[i] = std::string(buf) + e.what();
            }
        }
        for (const auto& err : errors) {
            if (!err.empty()) throw EstimationError(err);
        }

        SweepPoint& pt = res.points[g];
        pt.param = swept;
        pt.analytic_mi = analytic_mi_quadrature(dist);
        std::tie(pt.mean_mi, pt.std_mi) = mean_and_std(dep);
        std::tie(pt.null_mean, pt.null_std) = mean_and_std(ind);
    }
    return res;
}

std::vector<SweepResult> run_size_study(const SweepSpec& base,
                                        std::span<const std::pair<double, double>> settings) {
    std::vector<SweepResult> out;
    out.reserve(settings.size());
    for (std::size_t s = 0; s < settings.size(); ++s) {
        SweepSpec spec = base;
        spec.family = Family::gaussian_pair;
        spec.param = "n";
        spec.y_m = settings[s].first;
        spec.sigma_g = settings[s].second;
        spec.base_seed = derive_stream(base.base_seed, 0x5151 + s);
        out.push_back(run_sweep(spec));
    }
    return out;
}

std::vector<SweepResult> run_size_study(const SweepSpec& base) {
    return run_size_study(base, kSizeStudySettings);
}

double uniform_ym_for_target_mi(double target, double a) {
    // MI grows monotonically with |y_m| until the supports disjoin, so
    // bisection over [0, (1+a)/2] brackets any attainable target.
    double lo = 0.0;
    double hi = 0.5 * (1.0 + a);
    const double mi_hi = analytic_mi_quadrature(BenchmarkDistribution::uniform(hi, a));
    if (target <= 0.0 || target >= mi_hi) {
        throw EstimationError("uniform root search: target MI out of attainable range");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double mi = analytic_mi_quadrature(BenchmarkDistribution::uniform(mid, a));
        if (mi < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Table1Result run_table1(std::uint64_t seed, double factor) {
    Table1Result out;
    out.seed = seed;
    out.factor = factor;
    out.uniform_ym = uniform_ym_for_target_mi(0.1429, 1.0);

    const BenchmarkDistribution dists[] = {
        BenchmarkDistribution::gaussian(5.0, 1.0),
        BenchmarkDistribution::uniform(out.uniform_ym, 1.0),
        BenchmarkDistribution::exponential(),
    };
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& dist = dists[i];
        const LabeledDataset ds = dist.sample(1000, derive_stream(seed, i));
        const SignificanceReport rep =
            significance(ds, 100, derive_stream(seed, 16 + i), factor);
        Table1Row row;
        row.family = std::string(dist.family_name());
        row.y_m = dist.param_ym();
        row.sigma_g = dist.param_sigma();
        row.a = dist.param_a();
        row.mi = rep.observed_mi;
        row.null_mean = rep.surrogate_mean;
        row.null_std = rep.surrogate_std;
        row.z = rep.z_score;
        row.analytic_mi = analytic_mi_quadrature(dist);
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace dcmi
