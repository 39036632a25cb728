#pragma once

#include <cstdint>
#include <string_view>

#include "dcmi/dataset.hpp"
#include "dcmi/quadrature.hpp"
#include "dcmi/rng.hpp"

namespace dcmi {

enum class Family { gaussian_pair, uniform_pair, exponential_pair };

/// Two-component benchmark joint distribution over (label, y) with fixed
/// label weights (1/3, 2/3). Labels are 0 and 1.
///
///  - gaussian_pair:     component 0 is N(0,1), component 1 is N(y_m, sigma_g^2)
///  - uniform_pair:      component 0 is width-1 uniform centered at 0,
///                       component 1 is width-a uniform centered at -y_m
///  - exponential_pair:  rates fixed at 1 and 1/2 (no free parameters)
///
/// Exposes exact densities/CDFs and seeded sampling. Objects are immutable;
/// each sampling call owns its private RNG stream.
class BenchmarkDistribution {
public:
    static BenchmarkDistribution gaussian(double y_m, double sigma_g);
    static BenchmarkDistribution uniform(double y_m, double a);
    static BenchmarkDistribution exponential();

    Family family() const { return family_; }
    std::string_view family_name() const;
    int label_count() const { return 2; }

    double weight(int label) const;
    double joint_density(int label, double y) const;
    double conditional_density(int label, double y) const;
    double conditional_cdf(int label, double y) const;

    /// One draw from the conditional of `label` (inverse CDF for uniform and
    /// exponential, Box-Muller transform for Gaussian).
    double sample_value(int label, RngStream& rng) const;

    /// n i.i.d. (label, y) pairs; deterministic for a fixed seed.
    LabeledDataset sample(std::size_t n, std::uint64_t seed) const;

    /// n pairs with label independent of y but identical marginals; the
    /// matched null for sweep experiments.
    LabeledDataset sample_independent(std::size_t n, std::uint64_t seed) const;

    /// Integration window covering the joint support: +/-10 sigma around each
    /// Gaussian mean, exact support for uniforms (with the component edges as
    /// breakpoints), [0, 50*scale] for exponentials.
    QuadratureSpec quadrature_spec() const;

    double param_ym() const { return y_m_; }
    double param_sigma() const { return sigma_g_; }
    double param_a() const { return a_; }

private:
    BenchmarkDistribution(Family f, double y_m, double sigma_g, double a);

    Family family_;
    double y_m_ = 0.0;
    double sigma_g_ = 1.0;
    double a_ = 1.0;
};

} // namespace dcmi
