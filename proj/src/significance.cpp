#include "dcmi/significance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "dcmi/errors.hpp"
#include "dcmi/mi.hpp"
#include "dcmi/rng.hpp"

namespace dcmi {

namespace {

std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1.0))};
}

} // namespace

LabeledDataset make_surrogate(const LabeledDataset& ds, std::uint64_t seed) {
    const std::size_t n = ds.size();
    double mean = 0.0;
    for (double v : ds.values()) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : ds.values()) {
        const double d = v - mean;
        ss += d * d;
    }
    const double s = n > 1 ? std::sqrt(ss / (static_cast<double>(n) - 1.0)) : 0.0;
    if (!(s > 0.0)) {
        throw EstimationError("surrogate: zero variance in the value sequence");
    }

    std::vector<double> freqs(static_cast<std::size_t>(ds.label_count()));
    for (int x = 0; x < ds.label_count(); ++x) {
        freqs[static_cast<std::size_t>(x)] = ds.label_frequency(x);
    }

    RngStream rng(seed);
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = rng.categorical(freqs);
        rows.emplace_back(ds.token(label), mean + s * rng.normal());
    }
    return LabeledDataset(rows);
}

LabeledDataset make_permutation_surrogate(const LabeledDataset& ds, std::uint64_t seed) {
    const std::size_t n = ds.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    RngStream rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(i + 1));
        std::swap(order[i], order[std::min(j, i)]);
    }
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.emplace_back(ds.token(ds.label(order[i])), ds.value(i));
    }
    return LabeledDataset(rows);
}

SignificanceReport significance(const LabeledDataset& ds, std::size_t surrogates,
                                std::uint64_t seed, double factor, NullModel null_model) {
    if (surrogates < 2) {
        throw EstimationError("significance: insufficient surrogates (need at least 2)");
    }
    SignificanceReport rep;
    rep.surrogate_count = surrogates;
    rep.seed = seed;
    rep.factor = factor;
    rep.null_model = null_model;
    rep.observed_mi = estimate_mi(ds, factor).mi_nats;

    rep.surrogate_values.assign(surrogates, 0.0);
    std::vector<std::string> errors(surrogates);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(surrogates); ++i) {
        const auto r = static_cast<std::size_t>(i);
        try {
            const std::uint64_t stream = derive_stream(seed, r);
            const LabeledDataset sur = null_model == NullModel::gaussian
                                           ? make_surrogate(ds, stream)
                                           : make_permutation_surrogate(ds, stream);
            rep.surrogate_values[r] = estimate_mi(sur, factor).mi_nats;
        } catch (const std::exception& e) {
            errors[r] = e.what();
        }
    }
    for (std::size_t r = 0; r < surrogates; ++r) {
        if (!errors[r].empty()) {
            throw EstimationError("surrogate " + std::to_string(r) + ": " + errors[r]);
        }
    }

    const auto [mean, sd] = mean_and_std(rep.surrogate_values);
    rep.surrogate_mean = mean;
    rep.surrogate_std = sd;
    rep.z_score = (rep.observed_mi - mean) / sd;
    return rep;
}

} // namespace dcmi
