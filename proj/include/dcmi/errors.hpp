#pragma once

#include <stdexcept>
#include <string>

namespace dcmi {

/// Raised for unreadable or malformed input (files, CSV rows, CLI grids).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an estimation precondition fails (degenerate samples,
/// non-convergent quadrature) or a downstream computation cannot proceed.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dcmi
