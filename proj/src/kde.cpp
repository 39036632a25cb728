#include "dcmi/kde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "dcmi/errors.hpp"

namespace dcmi {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))

double sample_std(std::span<const double> values) {
    const std::size_t m = values.size();
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(m - 1));
}

} // namespace

Bandwidth silverman_bandwidth(std::span<const double> values, double factor) {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("bandwidth: factor must be positive");
    }
    if (values.size() < 2) {
        throw EstimationError("bandwidth: insufficient sample (need at least 2 values)");
    }
    const double s = sample_std(values);
    if (!(s > 0.0)) {
        throw EstimationError("bandwidth: zero variance");
    }
    const double m = static_cast<double>(values.size());
    return Bandwidth{factor * s * std::pow(m, -0.2), factor};
}

double kde_log_density(std::span<const double> values, double h, double y) {
    if (values.empty()) {
        throw std::invalid_argument("kde: empty sample");
    }
    if (!(h > 0.0)) {
        throw std::invalid_argument("kde: bandwidth must be positive");
    }
    const double inv2h2 = 1.0 / (2.0 * h * h);

    // Max-shifted exponential sum: the nearest sample point contributes
    // exactly exp(0), so the shifted sum is always >= 1 and its log finite.
    double min_sq = std::numeric_limits<double>::infinity();
    for (double v : values) {
        const double d = y - v;
        min_sq = std::min(min_sq, d * d);
    }
    const double base = min_sq * inv2h2;
    double sum = 0.0;
    for (double v : values) {
        const double d = y - v;
        sum += std::exp(base - d * d * inv2h2);
    }
    return std::log(sum) - base
         - std::log(static_cast<double>(values.size()) * h) - kLogSqrt2Pi;
}

double kde_density(std::span<const double> values, double h, double y) {
    return std::exp(kde_log_density(values, h, y));
}

ConditionalKde ConditionalKde::fit(const LabeledDataset& ds, double factor) {
    ConditionalKde model;
    model.factor_ = factor;
    auto parts = ds.partition();
    model.comps_.reserve(parts.size());
    for (auto& part : parts) {
        Component c;
        c.token = part.token;
        try {
            c.h = silverman_bandwidth(part.values, factor).h;
        } catch (const EstimationError& e) {
            throw EstimationError("label " + std::to_string(part.token) + ": " + e.what());
        }
        c.p = ds.label_frequency(part.label);
        c.log_p = std::log(c.p);
        const auto [lo, hi] = std::minmax_element(part.values.begin(), part.values.end());
        c.lo = *lo;
        c.hi = *hi;
        c.values = std::move(part.values);
        model.comps_.push_back(std::move(c));
    }
    return model;
}

double ConditionalKde::bandwidth(int label) const {
    return comps_.at(static_cast<std::size_t>(label)).h;
}

double ConditionalKde::frequency(int label) const {
    return comps_.at(static_cast<std::size_t>(label)).p;
}

std::int64_t ConditionalKde::token(int label) const {
    return comps_.at(static_cast<std::size_t>(label)).token;
}

std::span<const double> ConditionalKde::values(int label) const {
    return comps_.at(static_cast<std::size_t>(label)).values;
}

double ConditionalKde::log_conditional(int label, double y) const {
    const auto& c = comps_.at(static_cast<std::size_t>(label));
    return kde_log_density(c.values, c.h, y);
}

double ConditionalKde::conditional_density(int label, double y) const {
    return std::exp(log_conditional(label, y));
}

ConditionalKde::LogDensities ConditionalKde::log_densities(int label, double y) const {
    if (label < 0 || label >= label_count()) {
        throw std::out_of_range("kde: unknown label index " + std::to_string(label));
    }
    constexpr int kStack = 16;
    double stack_buf[kStack];
    std::vector<double> heap_buf;
    double* w = stack_buf;
    if (comps_.size() > kStack) {
        heap_buf.resize(comps_.size());
        w = heap_buf.data();
    }

    double own = 0.0;
    double amax = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < label_count(); ++x) {
        const auto& c = comps_[static_cast<std::size_t>(x)];
        const double lc = kde_log_density(c.values, c.h, y);
        if (x == label) own = lc;
        w[x] = c.log_p + lc;
        amax = std::max(amax, w[x]);
    }
    double s = 0.0;
    for (int x = 0; x < label_count(); ++x) {
        s += std::exp(w[x] - amax);
    }
    return LogDensities{own, amax + std::log(s)};
}

double ConditionalKde::log_marginal(double y) const {
    return log_densities(0, y).marginal;
}

double ConditionalKde::marginal_density(double y) const {
    return std::exp(log_marginal(y));
}

std::vector<double> ConditionalKde::conditional_grid(int label, std::span<const double> ys) const {
    std::vector<double> out(ys.size());
    const auto& c = comps_.at(static_cast<std::size_t>(label));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ys.size()); ++i) {
        out[static_cast<std::size_t>(i)] =
            std::exp(kde_log_density(c.values, c.h, ys[static_cast<std::size_t>(i)]));
    }
    return out;
}

std::vector<double> ConditionalKde::marginal_grid(std::span<const double> ys) const {
    std::vector<double> out(ys.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ys.size()); ++i) {
        out[static_cast<std::size_t>(i)] = marginal_density(ys[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::pair<double, double> ConditionalKde::padded_support(double pad) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& c : comps_) {
        lo = std::min(lo, c.lo - pad * c.h);
        hi = std::max(hi, c.hi + pad * c.h);
    }
    return {lo, hi};
}

void ConditionalKde::write_grid_csv(std::ostream& os, std::span<const double> ys) const {
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.10g", v);
        os << buf;
    };
    os << "# factor=" << factor_ << '\n';
    os << "y,label,conditional,marginal\n";
    std::vector<double> marg = marginal_grid(ys);
    for (int x = 0; x < label_count(); ++x) {
        std::vector<double> cond = conditional_grid(x, ys);
        for (std::size_t i = 0; i < ys.size(); ++i) {
            put(ys[i]);
            os << ',' << comps_[static_cast<std::size_t>(x)].token << ',';
            put(cond[i]);
            os << ',';
            put(marg[i]);
            os << '\n';
        }
    }
}

} // namespace dcmi
