#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcmi {

/// All rows of one label: the label index, its original token, and the
/// continuous values in their original row order.
struct LabelPartition {
    int label = 0;                ///< dense index 0..K-1
    std::int64_t token = 0;       ///< label as it appeared in the input
    std::vector<double> values;   ///< row order preserved within the label

    std::size_t count() const { return values.size(); }
};

/// Immutable sample of (discrete label, continuous value) pairs.
///
/// Input labels are arbitrary non-negative integers; they are densified to
/// 0..K-1 (ascending token order) on construction, with the token mapping
/// retained for reporting. Values must be finite. Safe for unrestricted
/// concurrent reads once constructed.
class LabeledDataset {
public:
    /// Build from (token, value) rows, validating and densifying labels.
    explicit LabeledDataset(std::span<const std::pair<std::int64_t, double>> rows);

    /// Parse the `label,value` CSV format. Errors name the offending line.
    static LabeledDataset load_csv(const std::string& path);

    /// Emit the same CSV format with original tokens and round-trip-exact values.
    void write_csv(std::ostream& os) const;

    std::size_t size() const { return values_.size(); }
    int label_count() const { return static_cast<int>(tokens_.size()); }

    int label(std::size_t row) const { return labels_[row]; }
    double value(std::size_t row) const { return values_[row]; }

    const std::vector<int>& labels() const { return labels_; }
    const std::vector<double>& values() const { return values_; }

    /// Original token of a dense label index.
    std::int64_t token(int label) const;
    /// Dense index of an original token; throws if the token is unknown.
    int index_of_token(std::int64_t token) const;

    /// Row count carrying the given dense label.
    std::size_t count(int label) const;

    /// Empirical marginal probability n_x / n.
    double label_frequency(int label) const;

    /// Per-label partitions, ordered by dense label index.
    std::vector<LabelPartition> partition() const;

private:
    std::vector<int> labels_;           // dense, row order
    std::vector<double> values_;        // row order
    std::vector<std::int64_t> tokens_;  // dense index -> original token
    std::vector<std::size_t> counts_;   // dense index -> n_x
};

} // namespace dcmi
