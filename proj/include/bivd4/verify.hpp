#pragma once

#include "bivd4/mask.hpp"

#include <array>
#include <compare>
#include <map>

namespace bivd4 {

// Integer translate (b,d) of the orthogonality condition
// sum_{i,j} c[i][j] * c[i-2b][j-2d] = 0 for (b,d) != (0,0).
struct ShiftPair {
    int b = 0;
    int d = 0;
    auto operator<=>(const ShiftPair&) const = default;
};

// Residual of the averaging condition: sum of all coefficients minus 4.
double averaging_residual(const Mask& m);

// Residual of the normalization condition: sum of squares minus 4.
double sum_of_squares_residual(const Mask& m);

// Shifted bilinear sum sum_{i,j} c[i][j]*c[i-2b][j-2d]; out-of-range factors
// read as zero. Throws ZeroShift for (0,0). Shifts with |b|>=2 and |d|>=2
// have empty overlap and come out exactly zero.
double orthogonality_residual(const Mask& m, const ShiftPair& shift);

// Residuals (left side minus right side) of the nine sum-rule equations, in
// their canonical display order. All nine vanish for a valid mask.
std::array<double, 9> regularity_residuals(const Mask& m);

// Sums of the coefficients over the four (i mod 2, j mod 2) parity classes:
// w1 even/even, w2 odd/even, w3 odd/odd, w4 even/odd. Each equals 1 for a
// valid mask.
struct ParitySums {
    double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0;
};

ParitySums parity_sums(const Mask& m);

// Aggregate verification report. passes() gates on the fourteen canonical
// residuals only (averaging, sum of squares, the three canonical shifts
// (1,1),(1,0),(0,1), and the nine sum rules); extra shifts are diagnostics.
struct ConstraintReport {
    double averaging_residual = 0.0;
    double sum_of_squares_residual = 0.0;
    std::map<ShiftPair, double> orthogonality_residuals;
    std::array<double, 9> regularity_residuals{};
    ParitySums parity_sums;
    std::map<ShiftPair, double> extra_shift_residuals;
    double max_abs_residual = 0.0;
    double tol = 0.0;

    bool passes() const;
};

inline constexpr ShiftPair canonical_shifts[3] = {{1, 1}, {1, 0}, {0, 1}};

// Evaluate every residual: the fourteen canonical ones plus all remaining
// shifts (b,d) in [-2,2]^2 \ {(0,0)} as extras. max_abs_residual covers the
// canonical and extra residuals alike.
ConstraintReport verify(const Mask& m, double tol = 1e-10);

} // namespace bivd4
