#include "dcmi/mi.hpp"

#include <cmath>
#include <cstddef>

#include "dcmi/errors.hpp"

namespace dcmi {

MiEstimate estimate_mi(const LabeledDataset& ds, double factor) {
    const ConditionalKde model = ConditionalKde::fit(ds, factor);
    const std::size_t n = ds.size();
    const int k = ds.label_count();

    // Per-row log ratios are independent; evaluate in parallel, then reduce
    // serially in label-then-row order so the result is schedule-invariant.
    std::vector<double> term(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        const auto i = static_cast<std::size_t>(j);
        const auto ld = model.log_densities(ds.label(i), ds.value(i));
        term[i] = ld.conditional - ld.marginal;
    }

    std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sums[static_cast<std::size_t>(ds.label(i))] += term[i];
    }

    MiEstimate out;
    out.n = n;
    out.factor = factor;
    out.per_label_terms.resize(static_cast<std::size_t>(k));
    out.label_tokens.resize(static_cast<std::size_t>(k));
    double entropy = 0.0;
    for (int x = 0; x < k; ++x) {
        const auto xi = static_cast<std::size_t>(x);
        out.per_label_terms[xi] = sums[xi] / static_cast<double>(n);
        out.label_tokens[xi] = ds.token(x);
        out.mi_nats += out.per_label_terms[xi];
        const double p = ds.label_frequency(x);
        entropy -= p * std::log(p);
    }
    out.label_entropy = entropy;
    return out;
}

namespace {

template <class LogDensity>
double differential_entropy(LogDensity&& log_f, const QuadratureSpec& spec) {
    return integrate(
        [&](double y) {
            const double lf = log_f(y);
            return -std::exp(lf) * lf;
        },
        spec);
}

} // namespace

JsdEstimate estimate_jsd(const ConditionalKde& model, const QuadratureSpec& spec) {
    JsdEstimate out;
    out.mixture_entropy =
        differential_entropy([&](double y) { return model.log_marginal(y); }, spec);
    const int k = model.label_count();
    out.component_entropies.resize(static_cast<std::size_t>(k));
    out.weights.resize(static_cast<std::size_t>(k));
    out.jsd_nats = out.mixture_entropy;
    for (int x = 0; x < k; ++x) {
        const auto xi = static_cast<std::size_t>(x);
        out.component_entropies[xi] = differential_entropy(
            [&](double y) { return model.log_conditional(x, y); }, spec);
        out.weights[xi] = model.frequency(x);
        out.jsd_nats -= out.weights[xi] * out.component_entropies[xi];
    }
    return out;
}

JsdEstimate estimate_jsd(const ConditionalKde& model) {
    const auto [lo, hi] = model.padded_support(10.0);
    QuadratureSpec spec;
    spec.lo = lo;
    spec.hi = hi;
    return estimate_jsd(model, spec);
}

double analytic_mi_quadrature(const BenchmarkDistribution& dist, const QuadratureSpec& spec) {
    double mi = 0.0;
    for (int x = 0; x < dist.label_count(); ++x) {
        const double px = dist.weight(x);
        mi += px * integrate(
                       [&](double y) {
                           const double fx = dist.conditional_density(x, y);
                           if (!(fx > 0.0)) return 0.0;
                           double phi = 0.0;
                           for (int l = 0; l < dist.label_count(); ++l) {
                               phi += dist.weight(l) * dist.conditional_density(l, y);
                           }
                           return fx * (std::log(fx) - std::log(phi));
                       },
                       spec);
    }
    return mi;
}

double analytic_mi_quadrature(const BenchmarkDistribution& dist) {
    return analytic_mi_quadrature(dist, dist.quadrature_spec());
}

double analytic_jsd_quadrature(const BenchmarkDistribution& dist, const QuadratureSpec& spec) {
    auto entropy_of = [&](auto&& density) {
        return integrate(
            [&](double y) {
                const double f = density(y);
                return f > 0.0 ? -f * std::log(f) : 0.0;
            },
            spec);
    };
    double jsd = entropy_of([&](double y) {
        double phi = 0.0;
        for (int l = 0; l < dist.label_count(); ++l) {
            phi += dist.weight(l) * dist.conditional_density(l, y);
        }
        return phi;
    });
    for (int x = 0; x < dist.label_count(); ++x) {
        jsd -= dist.weight(x) *
               entropy_of([&](double y) { return dist.conditional_density(x, y); });
    }
    return jsd;
}

double analytic_jsd_quadrature(const BenchmarkDistribution& dist) {
    return analytic_jsd_quadrature(dist, dist.quadrature_spec());
}

} // namespace dcmi
