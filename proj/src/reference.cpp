#include "dcmi/reference.hpp"

#include <cmath>
#include <vector>

#include "dcmi/errors.hpp"

namespace dcmi::ref {

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050242;

} // namespace

double kde_density(std::span<const double> values, double h, double y) {
    double sum = 0.0;
    for (double v : values) {
        const double u = (y - v) / h;
        sum += std::exp(-0.5 * u * u);
    }
    return sum / (static_cast<double>(values.size()) * h * kSqrt2Pi);
}

double estimate_mi(const LabeledDataset& ds, double factor) {
    const auto parts = ds.partition();
    const auto n = static_cast<double>(ds.size());

    std::vector<double> bandwidths;
    std::vector<double> freqs;
    for (const auto& part : parts) {
        const auto m = static_cast<double>(part.count());
        if (m < 2) throw EstimationError("reference: label with fewer than 2 values");
        double mean = 0.0;
        for (double v : part.values) mean += v;
        mean /= m;
        double ss = 0.0;
        for (double v : part.values) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / (m - 1.0));
        if (!(sd > 0.0)) throw EstimationError("reference: zero-variance label");
        bandwidths.push_back(factor * sd * std::pow(m, -0.2));
        freqs.push_back(m / n);
    }

    double total = 0.0;
    for (std::size_t x = 0; x < parts.size(); ++x) {
        for (double y : parts[x].values) {
            const double num = kde_density(parts[x].values, bandwidths[x], y);
            double phi = 0.0;
            for (std::size_t l = 0; l < parts.size(); ++l) {
                phi += freqs[l] * kde_density(parts[l].values, bandwidths[l], y);
            }
            total += std::log(num / phi);
        }
    }
    return total / n;
}

} // namespace dcmi::ref
