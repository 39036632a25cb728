#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "dcmi/errors.hpp"
#include "dcmi/kde.hpp"
#include "dcmi/quadrature.hpp"
#include "dcmi/rng.hpp"

using dcmi::ConditionalKde;
using dcmi::LabeledDataset;

namespace {

LabeledDataset two_label_sample(std::uint64_t seed, int n, double shift) {
    dcmi::RngStream rng(seed);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (int i = 0; i < n; ++i) {
        const int label = rng.uniform01() < 1.0 / 3.0 ? 0 : 1;
        rows.emplace_back(label, rng.normal() + (label == 1 ? shift : 0.0));
    }
    return LabeledDataset(rows);
}

} // namespace

TEST_CASE("rule-of-thumb bandwidth at unit deviation") {
    // 1000 values with sample std exactly 1: +-1 repeated (mean 0, ss = 1000,
    // divisor 999) would not give s=1, so scale a two-point pattern instead.
    std::vector<double> values;
    const double amp = std::sqrt(999.0 / 1000.0);
    for (int i = 0; i < 500; ++i) {
        values.push_back(amp);
        values.push_back(-amp);
    }
    const auto bw = dcmi::silverman_bandwidth(values, 1.06);
    const double expected = 1.06 * std::pow(1000.0, -0.2);
    CHECK(expected == doctest::Approx(0.2662599617400155).epsilon(1e-12));
    CHECK(bw.h == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bandwidth preconditions") {
    const std::vector<double> one = {1.0};
    CHECK_THROWS_WITH_AS(dcmi::silverman_bandwidth(one, 1.06),
                         doctest::Contains("insufficient sample"), dcmi::EstimationError);
    const std::vector<double> flat = {5.0, 5.0, 5.0};
    CHECK_THROWS_WITH_AS(dcmi::silverman_bandwidth(flat, 1.06),
                         doctest::Contains("zero variance"), dcmi::EstimationError);
    const std::vector<double> ok = {0.0, 1.0};
    CHECK_THROWS_AS(dcmi::silverman_bandwidth(ok, 0.0), std::invalid_argument);
}

TEST_CASE("single-point kernel values") {
    const std::vector<double> v = {0.0};
    CHECK(dcmi::kde_density(v, 1.0, 0.0) ==
          doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(dcmi::kde_density(v, 1.0, 1.0) ==
          doctest::Approx(0.2419707245191434).epsilon(1e-14));
}

TEST_CASE("kde is consistent at the mode of a normal sample") {
    dcmi::RngStream rng(314);
    std::vector<double> values(1000);
    for (auto& v : values) v = rng.normal();
    const auto bw = dcmi::silverman_bandwidth(values, 1.06);
    CHECK(dcmi::kde_density(values, bw.h, 0.0) ==
          doctest::Approx(0.3989422804014327).epsilon(0.13));  // abs tol 0.05
}

TEST_CASE("log density is finite far from the data") {
    const std::vector<double> v = {-1.0, 0.0, 1.0};
    const double lf = dcmi::kde_log_density(v, 0.5, 1e8);
    CHECK(std::isfinite(lf));
    CHECK(lf < -1e10);
}

TEST_CASE("fit uses each label's own values and count") {
    const auto ds = two_label_sample(21, 600, 2.0);
    const auto model = ConditionalKde::fit(ds, 1.06);
    REQUIRE(model.label_count() == 2);
    const auto parts = ds.partition();
    for (int x = 0; x < 2; ++x) {
        const auto bw = dcmi::silverman_bandwidth(parts[static_cast<std::size_t>(x)].values, 1.06);
        CHECK(model.bandwidth(x) == bw.h);
        CHECK(model.frequency(x) ==
              ds.label_frequency(x));
    }
}

TEST_CASE("fit errors name the offending label") {
    std::vector<std::pair<std::int64_t, double>> rows = {{3, 1.0}, {0, 0.0}, {0, 1.0}};
    CHECK_THROWS_WITH_AS(ConditionalKde::fit(LabeledDataset(rows)),
                         doctest::Contains("label 3"), dcmi::EstimationError);
    rows = {{7, 5.0}, {7, 5.0}, {0, 0.0}, {0, 1.0}};
    CHECK_THROWS_WITH_AS(ConditionalKde::fit(LabeledDataset(rows)),
                         doctest::Contains("label 7"), dcmi::EstimationError);
}

TEST_CASE("labels with identical values fit identical densities") {
    std::vector<std::pair<std::int64_t, double>> rows;
    const std::vector<double> vals = {0.1, -0.4, 1.2, 0.8, -1.0};
    for (double v : vals) rows.emplace_back(0, v);
    for (double v : vals) rows.emplace_back(1, v);
    const auto model = ConditionalKde::fit(LabeledDataset(rows));
    CHECK(model.bandwidth(0) == model.bandwidth(1));
    for (double y : {-2.0, 0.0, 0.5, 3.0}) {
        CHECK(model.log_conditional(0, y) == model.log_conditional(1, y));
    }
}

TEST_CASE("conditional delegates to the kernel estimate") {
    const auto ds = two_label_sample(4, 100, 1.0);
    const auto model = ConditionalKde::fit(ds);
    for (double y : {-1.5, 0.0, 2.2}) {
        CHECK(model.conditional_density(0, y) ==
              dcmi::kde_density(model.values(0), model.bandwidth(0), y));
    }
    CHECK_THROWS_AS(model.log_conditional(5, 0.0), std::out_of_range);
}

TEST_CASE("single-label marginal equals the sole conditional") {
    std::vector<std::pair<std::int64_t, double>> rows;
    dcmi::RngStream rng(8);
    for (int i = 0; i < 50; ++i) rows.emplace_back(2, rng.normal());
    const auto model = ConditionalKde::fit(LabeledDataset(rows));
    for (double y : {-2.0, -0.3, 0.0, 1.7}) {
        CHECK(model.log_marginal(y) == model.log_conditional(0, y));
    }
}

TEST_CASE("marginal is the frequency-weighted sum of conditionals") {
    const auto ds = two_label_sample(99, 300, 1.5);
    const auto model = ConditionalKde::fit(ds);
    for (double y : {-2.0, 0.0, 0.9, 4.0}) {
        const double direct = model.frequency(0) * model.conditional_density(0, y) +
                              model.frequency(1) * model.conditional_density(1, y);
        CHECK(model.marginal_density(y) == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("fitted conditionals integrate to one") {
    const auto ds = two_label_sample(55, 120, 3.0);
    const auto model = ConditionalKde::fit(ds);
    for (int x = 0; x < model.label_count(); ++x) {
        const auto vals = model.values(x);
        const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
        dcmi::QuadratureSpec spec;
        spec.lo = *mn - 8.0 * model.bandwidth(x);
        spec.hi = *mx + 8.0 * model.bandwidth(x);
        const double mass =
            dcmi::integrate([&](double y) { return model.conditional_density(x, y); }, spec);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("weighted conditional never exceeds the marginal") {
    const auto ds = two_label_sample(300, 200, 1.0);
    const auto model = ConditionalKde::fit(ds);
    for (double y = -6.0; y <= 7.0; y += 0.37) {
        for (int x = 0; x < 2; ++x) {
            const auto ld = model.log_densities(x, y);
            const double ratio =
                std::exp(std::log(model.frequency(x)) + ld.conditional - ld.marginal);
            CHECK(ratio > 0.0);
            CHECK(ratio <= 1.0);
        }
    }
}

TEST_CASE("shift equivariance is exact for exactly representable shifts") {
    // Dyadic values, power-of-two count and shift: every intermediate is
    // exactly representable, so the densities must match bit for bit.
    const std::vector<double> base = {-2.0, -1.25, -0.5, 0.25, 0.75, 1.0, 1.5, 2.0};
    const double c = 512.0;
    std::vector<double> shifted;
    for (double v : base) shifted.push_back(v + c);

    const auto bw0 = dcmi::silverman_bandwidth(base, 1.06);
    const auto bw1 = dcmi::silverman_bandwidth(shifted, 1.06);
    CHECK(bw0.h == bw1.h);
    for (double y : {-1.0, 0.0, 0.5, 3.0}) {
        CHECK(dcmi::kde_log_density(base, bw0.h, y) ==
              dcmi::kde_log_density(shifted, bw1.h, y + c));
    }
}

TEST_CASE("scale covariance for a power-of-two factor") {
    const std::vector<double> base = {-2.0, -1.25, -0.5, 0.25, 0.75, 1.0, 1.5, 2.0};
    const double c = 4.0;
    std::vector<double> scaled;
    for (double v : base) scaled.push_back(c * v);

    const auto bw0 = dcmi::silverman_bandwidth(base, 1.06);
    const auto bw1 = dcmi::silverman_bandwidth(scaled, 1.06);
    CHECK(bw1.h == doctest::Approx(c * bw0.h).epsilon(1e-15));
    for (double y : {-1.0, 0.1, 0.6, 2.5}) {
        const double f = dcmi::kde_density(base, bw0.h, y);
        const double fs = dcmi::kde_density(scaled, bw1.h, c * y);
        CHECK(fs == doctest::Approx(f / c).epsilon(1e-13));
    }
}

TEST_CASE("grid export emits the documented header and shape") {
    const auto ds = two_label_sample(77, 80, 1.0);
    const auto model = ConditionalKde::fit(ds);
    const std::vector<double> grid = {-1.0, 0.0, 1.0, 2.0};
    std::ostringstream os;
    model.write_grid_csv(os, grid);
    const std::string text = os.str();
    CHECK(text.find("y,label,conditional,marginal\n") != std::string::npos);
    CHECK(text.find("# factor=1.06") != std::string::npos);
    const auto rows = std::count(text.begin(), text.end(), '\n');
    CHECK(rows == 2 + 4 * 2);  // metadata + header + grid x labels
}
