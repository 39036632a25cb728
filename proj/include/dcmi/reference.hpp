#pragma once

#include <span>

#include "dcmi/dataset.hpp"

// Plain serial implementations of the production kernels, kept as an
// independent route for tests and as the baseline for the benchmark. Direct
// density sums (no log-space, no parallel loops); valid wherever the direct
// sums do not underflow.
namespace dcmi::ref {

double kde_density(std::span<const double> values, double h, double y);

double estimate_mi(const LabeledDataset& ds, double factor = 1.06);

} // namespace dcmi::ref
