#pragma once

#include <stdexcept>
#include <string>

namespace ica {

// Malformed input files (CSV / project JSON / schema breaks).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Misconfigured computation (unknown domain id, metric without values, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested coefficient does not apply to the given data shape
// (e.g. two-coder coefficients on three coders, unequal rater counts).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ica
