#pragma once

#include <cstdint>
#include <vector>

#include "dcmi/dataset.hpp"

namespace dcmi {

/// Null model used for surrogate generation. The Gaussian null draws labels
/// from the empirical frequencies and values from a single Gaussian fitted to
/// the whole value sequence. The permutation null shuffles labels against
/// values, preserving both marginals exactly (offered as an extension).
enum class NullModel { gaussian, permutation };

/// One independence-preserving surrogate of the dataset (Gaussian null).
/// Requires nonzero overall value variance.
LabeledDataset make_surrogate(const LabeledDataset& ds, std::uint64_t seed);

/// Permutation surrogate: same rows, labels shuffled against values.
LabeledDataset make_permutation_surrogate(const LabeledDataset& ds, std::uint64_t seed);

struct SignificanceReport {
    double observed_mi = 0.0;
    double surrogate_mean = 0.0;
    double surrogate_std = 0.0;              ///< divisor count-1
    double z_score = 0.0;                    ///< (observed - mean) / std
    std::size_t surrogate_count = 0;
    std::vector<double> surrogate_values;    ///< replicate-index order
    std::uint64_t seed = 0;
    double factor = 1.06;
    NullModel null_model = NullModel::gaussian;
};

/// Estimate MI on ds and on `surrogates` seeded surrogates (same bandwidth
/// factor throughout); replicates run on independent streams and may execute
/// in parallel, aggregated in replicate order. Requires surrogates >= 2.
SignificanceReport significance(const LabeledDataset& ds, std::size_t surrogates,
                                std::uint64_t seed, double factor = 1.06,
                                NullModel null_model = NullModel::gaussian);

} // namespace dcmi
