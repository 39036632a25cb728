#include "dcmi/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "dcmi/errors.hpp"

namespace dcmi {

namespace {

std::string row_error(std::size_t line_no, const std::string& why) {
    return "line " + std::to_string(line_no) + ": " + why;
}

} // namespace

LabeledDataset::LabeledDataset(std::span<const std::pair<std::int64_t, double>> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("dataset: at least one pair required");
    }
    tokens_.reserve(8);
    for (const auto& [token, value] : rows) {
        if (token < 0) {
            throw std::invalid_argument("dataset: negative label " + std::to_string(token));
        }
        if (!std::isfinite(value)) {
            throw std::invalid_argument("dataset: non-finite value");
        }
        if (!std::binary_search(tokens_.begin(), tokens_.end(), token)) {
            tokens_.insert(std::upper_bound(tokens_.begin(), tokens_.end(), token), token);
        }
    }
    counts_.assign(tokens_.size(), 0);
    labels_.reserve(rows.size());
    values_.reserve(rows.size());
    for (const auto& [token, value] : rows) {
        const auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
        const int dense = static_cast<int>(it - tokens_.begin());
        labels_.push_back(dense);
        values_.push_back(value);
        ++counts_[dense];
    }
}

LabeledDataset LabeledDataset::load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](std::string& out) -> bool {
        if (!std::getline(in, out)) return false;
        ++line_no;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    };

    if (!next_line(line) || line != "label,value") {
        throw InputError(path + ": missing `label,value` header");
    }

    std::vector<std::pair<std::int64_t, double>> rows;
    while (next_line(line)) {
        if (line.empty() && in.eof()) break;  // trailing newline
        const char* first = line.data();
        const char* last = line.data() + line.size();

        std::int64_t token = 0;
        auto [ptr, ec] = std::from_chars(first, last, token);
        if (ec != std::errc() || ptr == last || *ptr != ',') {
            throw InputError(path + ": " + row_error(line_no, "malformed row `" + line + "`"));
        }
        if (token < 0) {
            throw InputError(path + ": " + row_error(line_no, "negative label"));
        }

        double value = 0.0;
        auto [vptr, vec] = std::from_chars(ptr + 1, last, value);
        if (vec != std::errc() || vptr != last) {
            throw InputError(path + ": " + row_error(line_no, "malformed row `" + line + "`"));
        }
        if (!std::isfinite(value)) {
            throw InputError(path + ": " + row_error(line_no, "non-finite value"));
        }
        rows.emplace_back(token, value);
    }
    if (rows.empty()) {
        throw InputError(path + ": empty dataset");
    }
    return LabeledDataset(rows);
}

void LabeledDataset::write_csv(std::ostream& os) const {
    os << "label,value\n";
    char buf[40];
    for (std::size_t i = 0; i < values_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", values_[i]);
        os << tokens_[static_cast<std::size_t>(labels_[i])] << ',' << buf << '\n';
    }
}

std::int64_t LabeledDataset::token(int label) const {
    if (label < 0 || label >= label_count()) {
        throw std::out_of_range("dataset: unknown label index " + std::to_string(label));
    }
    return tokens_[static_cast<std::size_t>(label)];
}

int LabeledDataset::index_of_token(std::int64_t token) const {
    const auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end() || *it != token) {
        throw std::out_of_range("dataset: unknown label " + std::to_string(token));
    }
    return static_cast<int>(it - tokens_.begin());
}

std::size_t LabeledDataset::count(int label) const {
    if (label < 0 || label >= label_count()) {
        throw std::out_of_range("dataset: unknown label index " + std::to_string(label));
    }
    return counts_[static_cast<std::size_t>(label)];
}

double LabeledDataset::label_frequency(int label) const {
    return static_cast<double>(count(label)) / static_cast<double>(size());
}

std::vector<LabelPartition> LabeledDataset::partition() const {
    std::vector<LabelPartition> parts(tokens_.size());
    for (std::size_t x = 0; x < tokens_.size(); ++x) {
        parts[x].label = static_cast<int>(x);
        parts[x].token = tokens_[x];
        parts[x].values.reserve(counts_[x]);
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        parts[static_cast<std::size_t>(labels_[i])].values.push_back(values_[i]);
    }
    return parts;
}

} // namespace dcmi
