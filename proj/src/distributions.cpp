#include "dcmi/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcmi {

namespace {

constexpr double kW0 = 1.0 / 3.0;
constexpr double kW1 = 2.0 / 3.0;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kExpScale0 = 1.0;  // rate 1
constexpr double kExpScale1 = 2.0;  // rate 1/2

double gauss_pdf(double y, double mean, double sigma) {
    const double z = (y - mean) / sigma;
    return kInvSqrt2Pi / sigma * std::exp(-0.5 * z * z);
}

double gauss_cdf(double y, double mean, double sigma) {
    return 0.5 * std::erfc(-(y - mean) / (sigma * 1.41421356237309504880));
}

} // namespace

BenchmarkDistribution::BenchmarkDistribution(Family f, double y_m, double sigma_g, double a)
    : family_(f), y_m_(y_m), sigma_g_(sigma_g), a_(a) {}

BenchmarkDistribution BenchmarkDistribution::gaussian(double y_m, double sigma_g) {
    if (!(sigma_g > 0.0)) {
        throw std::invalid_argument("gaussian_pair: sigma_g must be positive");
    }
    return BenchmarkDistribution(Family::gaussian_pair, y_m, sigma_g, 1.0);
}

BenchmarkDistribution BenchmarkDistribution::uniform(double y_m, double a) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("uniform_pair: width a must be positive");
    }
    return BenchmarkDistribution(Family::uniform_pair, y_m, 1.0, a);
}

BenchmarkDistribution BenchmarkDistribution::exponential() {
    // Rates are fixed at 1 and 1/2; there are no free parameters.
    return BenchmarkDistribution(Family::exponential_pair, 0.0, 1.0, 1.0);
}

std::string_view BenchmarkDistribution::family_name() const {
    switch (family_) {
        case Family::gaussian_pair: return "gaussian";
        case Family::uniform_pair: return "uniform";
        case Family::exponential_pair: return "exponential";
    }
    return "?";
}

double BenchmarkDistribution::weight(int label) const {
    if (label == 0) return kW0;
    if (label == 1) return kW1;
    throw std::invalid_argument("benchmark distribution: invalid label");
}

double BenchmarkDistribution::conditional_density(int label, double y) const {
    if (label != 0 && label != 1) {
        throw std::invalid_argument("benchmark distribution: invalid label");
    }
    switch (family_) {
        case Family::gaussian_pair:
            return label == 0 ? gauss_pdf(y, 0.0, 1.0) : gauss_pdf(y, y_m_, sigma_g_);
        case Family::uniform_pair: {
            // Component 1 sits on (-y_m - a/2, -y_m + a/2): the step-function
            // form shifts it to the negative side of y_m.
            const double lo = label == 0 ? -0.5 : -y_m_ - 0.5 * a_;
            const double hi = label == 0 ? 0.5 : -y_m_ + 0.5 * a_;
            const double dens = label == 0 ? 1.0 : 1.0 / a_;
            return (y > lo && y < hi) ? dens : 0.0;
        }
        case Family::exponential_pair: {
            if (!(y > 0.0)) return 0.0;
            const double scale = label == 0 ? kExpScale0 : kExpScale1;
            return std::exp(-y / scale) / scale;
        }
    }
    return 0.0;
}

double BenchmarkDistribution::joint_density(int label, double y) const {
    return weight(label) * conditional_density(label, y);
}

double BenchmarkDistribution::conditional_cdf(int label, double y) const {
    if (label != 0 && label != 1) {
        throw std::invalid_argument("benchmark distribution: invalid label");
    }
    switch (family_) {
        case Family::gaussian_pair:
            return label == 0 ? gauss_cdf(y, 0.0, 1.0) : gauss_cdf(y, y_m_, sigma_g_);
        case Family::uniform_pair: {
            const double lo = label == 0 ? -0.5 : -y_m_ - 0.5 * a_;
            const double w = label == 0 ? 1.0 : a_;
            if (y <= lo) return 0.0;
            if (y >= lo + w) return 1.0;
            return (y - lo) / w;
        }
        case Family::exponential_pair: {
            if (y <= 0.0) return 0.0;
            const double scale = label == 0 ? kExpScale0 : kExpScale1;
            return -std::expm1(-y / scale);
        }
    }
    return 0.0;
}

double BenchmarkDistribution::sample_value(int label, RngStream& rng) const {
    switch (family_) {
        case Family::gaussian_pair:
            return label == 0 ? rng.normal() : y_m_ + sigma_g_ * rng.normal();
        case Family::uniform_pair:
            return label == 0 ? rng.uniform(-0.5, 0.5)
                              : rng.uniform(-y_m_ - 0.5 * a_, -y_m_ + 0.5 * a_);
        case Family::exponential_pair:
            return rng.exponential(label == 0 ? kExpScale0 : kExpScale1);
    }
    return 0.0;
}

LabeledDataset BenchmarkDistribution::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) {
        throw std::invalid_argument("sample: n must be at least 1");
    }
    RngStream rng(seed);
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = rng.uniform01() < kW0 ? 0 : 1;
        rows.emplace_back(label, sample_value(label, rng));
    }
    return LabeledDataset(rows);
}

LabeledDataset BenchmarkDistribution::sample_independent(std::size_t n, std::uint64_t seed) const {
    if (n < 1) {
        throw std::invalid_argument("sample: n must be at least 1");
    }
    RngStream rng(seed);
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = rng.uniform01() < kW0 ? 0 : 1;
        // y is drawn from the mixture marginal via a hidden component draw,
        // so label and y share marginals with the joint but are independent.
        const int hidden = rng.uniform01() < kW0 ? 0 : 1;
        rows.emplace_back(label, sample_value(hidden, rng));
    }
    return LabeledDataset(rows);
}

QuadratureSpec BenchmarkDistribution::quadrature_spec() const {
    QuadratureSpec spec;
    switch (family_) {
        case Family::gaussian_pair: {
            const double lo0 = -10.0, hi0 = 10.0;
            const double lo1 = y_m_ - 10.0 * sigma_g_, hi1 = y_m_ + 10.0 * sigma_g_;
            spec.lo = std::min(lo0, lo1);
            spec.hi = std::max(hi0, hi1);
            break;
        }
        case Family::uniform_pair: {
            const double e0l = -0.5, e0r = 0.5;
            const double e1l = -y_m_ - 0.5 * a_, e1r = -y_m_ + 0.5 * a_;
            spec.lo = std::min(e0l, e1l);
            spec.hi = std::max(e0r, e1r);
            spec.breakpoints = {e0l, e0r, e1l, e1r};
            break;
        }
        case Family::exponential_pair:
            spec.lo = 0.0;
            spec.hi = 50.0 * kExpScale1;
            break;
    }
    return spec;
}

} // namespace dcmi
