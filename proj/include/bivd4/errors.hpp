#pragma once

#include <stdexcept>
#include <string>

namespace bivd4 {

// Parameter pair lies outside the feasible region (negative discriminant).
struct InfeasibleParameters : std::runtime_error {
    explicit InfeasibleParameters(const std::string& what) : std::runtime_error(what) {}
};

// Orthogonality shift (0,0) requested; that sum is the norm, not a residual.
struct ZeroShift : std::invalid_argument {
    explicit ZeroShift(const std::string& what) : std::invalid_argument(what) {}
};

// Fixed-point iteration failed to settle (degenerate spectrum or iteration cap).
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Key-point vector does not sum to one within tolerance.
struct InvalidKeyVector : std::invalid_argument {
    explicit InvalidKeyVector(const std::string& what) : std::invalid_argument(what) {}
};

// Translate range too small to cover the requested evaluation window.
struct InsufficientRange : std::invalid_argument {
    explicit InsufficientRange(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed mask/report file contents.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bivd4
