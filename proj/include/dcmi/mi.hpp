#pragma once

#include <cstdint>
#include <vector>

#include "dcmi/dataset.hpp"
#include "dcmi/distributions.hpp"
#include "dcmi/kde.hpp"
#include "dcmi/quadrature.hpp"

namespace dcmi {

/// Mutual-information estimate in nats with per-label diagnostics.
/// mi_nats is the sum of per_label_terms and never exceeds label_entropy.
struct MiEstimate {
    double mi_nats = 0.0;
    std::vector<double> per_label_terms;      ///< (1/n) * sum of log ratios, per dense label
    std::vector<std::int64_t> label_tokens;   ///< original tokens, aligned with terms
    std::size_t n = 0;
    double label_entropy = 0.0;               ///< H of the empirical label marginal, nats
    double factor = 1.06;                     ///< bandwidth factor used
};

/// Sample-average MI estimator: fits the per-label KDE, then averages the
/// log ratio of own-label conditional to mixture marginal over all rows.
/// Log ratios are formed as log-density differences; the per-label partial
/// sums are accumulated in label-then-row order.
MiEstimate estimate_mi(const LabeledDataset& ds, double factor = 1.06);

/// Weighted Jensen-Shannon divergence of the fitted densities, computed from
/// differential entropies by quadrature. Equals the MI functional when the
/// weights are the label frequencies, so it cross-checks estimate_mi.
struct JsdEstimate {
    double jsd_nats = 0.0;
    double mixture_entropy = 0.0;
    std::vector<double> component_entropies;  ///< per dense label
    std::vector<double> weights;              ///< label frequencies
};

JsdEstimate estimate_jsd(const ConditionalKde& model, const QuadratureSpec& spec);
/// Overload integrating over the model's padded support (10 bandwidths).
JsdEstimate estimate_jsd(const ConditionalKde& model);

/// Exact MI of a benchmark distribution by adaptive quadrature against its
/// exact densities; the oracle the sweep experiments compare to.
double analytic_mi_quadrature(const BenchmarkDistribution& dist, const QuadratureSpec& spec);
double analytic_mi_quadrature(const BenchmarkDistribution& dist);

/// Same functional via the entropy route (mixture entropy minus weighted
/// component entropies), on the exact densities.
double analytic_jsd_quadrature(const BenchmarkDistribution& dist, const QuadratureSpec& spec);
double analytic_jsd_quadrature(const BenchmarkDistribution& dist);

} // namespace dcmi
