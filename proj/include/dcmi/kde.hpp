#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "dcmi/dataset.hpp"

namespace dcmi {

struct Bandwidth {
    double h = 0.0;        ///< smoothing width, > 0
    double factor = 1.06;  ///< rule-of-thumb multiplier
};

/// Rule-of-thumb bandwidth h = factor * s * m^(-1/5), with s the unbiased
/// sample standard deviation. Requires m >= 2 and s > 0.
Bandwidth silverman_bandwidth(std::span<const double> values, double factor = 1.06);

/// Log of the Gaussian-kernel density estimate at y. Evaluated as a
/// max-shifted exponential sum, so the result is finite at any finite y.
double kde_log_density(std::span<const double> values, double h, double y);

/// exp(kde_log_density). Strictly positive wherever exp does not underflow.
double kde_density(std::span<const double> values, double h, double y);

/// Per-label Gaussian KDE with label weights, the conditional/marginal model
/// behind the MI estimator. Immutable after fit; concurrent evaluation is
/// safe and lock-free.
class ConditionalKde {
public:
    /// Fit one kernel density per label, each with its own rule-of-thumb
    /// bandwidth, and record empirical label frequencies. Every label needs
    /// at least two values with nonzero variance; violations name the label.
    static ConditionalKde fit(const LabeledDataset& ds, double factor = 1.06);

    int label_count() const { return static_cast<int>(comps_.size()); }
    double factor() const { return factor_; }
    double bandwidth(int label) const;
    double frequency(int label) const;
    std::int64_t token(int label) const;
    std::span<const double> values(int label) const;

    double log_conditional(int label, double y) const;
    double conditional_density(int label, double y) const;
    double log_marginal(double y) const;
    double marginal_density(double y) const;

    struct LogDensities {
        double conditional;  ///< log density of the queried label
        double marginal;     ///< log of the weighted mixture
    };
    /// Both logs in one pass over the labels; the marginal is a max-shifted
    /// log-sum so the mixture never falls below any weighted component.
    LogDensities log_densities(int label, double y) const;

    /// Batch evaluation over a grid (parallel across grid points).
    std::vector<double> conditional_grid(int label, std::span<const double> ys) const;
    std::vector<double> marginal_grid(std::span<const double> ys) const;

    /// Union of per-label supports padded by `pad` bandwidths.
    std::pair<double, double> padded_support(double pad = 8.0) const;

    /// Grid export: header `y,label,conditional,marginal`, one row per
    /// (grid point, label); labels reported as their original tokens.
    void write_grid_csv(std::ostream& os, std::span<const double> ys) const;

private:
    struct Component {
        std::int64_t token = 0;
        std::vector<double> values;
        double h = 0.0;
        double p = 0.0;
        double log_p = 0.0;
        double lo = 0.0;  // min value
        double hi = 0.0;  // max value
    };
    std::vector<Component> comps_;
    double factor_ = 1.06;
};

} // namespace dcmi
