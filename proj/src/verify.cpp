#include "bivd4/verify.hpp"

#include "bivd4/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bivd4 {

namespace {

// Shared accumulation helpers so that identities between residuals and
// parity sums hold bitwise, not merely to rounding.
double even_even(const Mask& m) { return m.at(0, 0) + m.at(0, 2) + m.at(2, 0) + m.at(2, 2); }
double odd_even(const Mask& m) { return m.at(1, 0) + m.at(1, 2) + m.at(3, 0) + m.at(3, 2); }
double odd_odd(const Mask& m) { return m.at(1, 1) + m.at(1, 3) + m.at(3, 1) + m.at(3, 3); }
double even_odd(const Mask& m) { return m.at(0, 1) + m.at(0, 3) + m.at(2, 1) + m.at(2, 3); }

} // namespace

ParitySums parity_sums(const Mask& m) {
    return {even_even(m), odd_even(m), odd_odd(m), even_odd(m)};
}

double averaging_residual(const Mask& m) {
    return ((even_even(m) + odd_even(m)) + odd_odd(m)) + even_odd(m) - 4.0;
}

double sum_of_squares_residual(const Mask& m) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m.at(i, j) * m.at(i, j);
    return s - 4.0;
}

double orthogonality_residual(const Mask& m, const ShiftPair& shift) {
    if (shift.b == 0 && shift.d == 0)
        throw ZeroShift("shift (0,0) is the normalization sum, not an orthogonality residual");
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m.at(i, j) * m.at(i - 2 * shift.b, j - 2 * shift.d);
    return s;
}

std::array<double, 9> regularity_residuals(const Mask& m) {
    const double w1 = even_even(m);
    const double w2 = odd_even(m);
    const double w3 = odd_odd(m);
    const double w4 = even_odd(m);
    const double col2_pair = 2.0 * m.at(2, 1) + 2.0 * m.at(2, 3);
    const double row2_pair = 2.0 * m.at(0, 2) + 2.0 * m.at(2, 2);

    std::array<double, 9> r{};
    r[0] = w4 - w1;
    r[1] = w3 - w1;
    r[2] = w2 - w1;
    r[3] = (2.0 * m.at(2, 0) + 2.0 * m.at(2, 2)) - col2_pair;
    r[4] = (m.at(1, 1) + m.at(1, 3) + 3.0 * m.at(3, 1) + 3.0 * m.at(3, 3)) - col2_pair;
    r[5] = (m.at(1, 0) + m.at(1, 2) + 3.0 * m.at(3, 0) + 3.0 * m.at(3, 2)) - col2_pair;
    r[6] = (m.at(0, 1) + m.at(2, 1) + 3.0 * m.at(0, 3) + 3.0 * m.at(2, 3)) - row2_pair;
    r[7] = (m.at(1, 1) + m.at(3, 1) + 3.0 * m.at(1, 3) + 3.0 * m.at(3, 3)) - row2_pair;
    r[8] = (2.0 * m.at(1, 2) + 2.0 * m.at(3, 2)) - row2_pair;
    return r;
}

bool ConstraintReport::passes() const {
    if (std::abs(averaging_residual) >= tol) return false;
    if (std::abs(sum_of_squares_residual) >= tol) return false;
    for (const ShiftPair& s : canonical_shifts) {
        auto it = orthogonality_residuals.find(s);
        if (it == orthogonality_residuals.end() || std::abs(it->second) >= tol) return false;
    }
    for (double r : regularity_residuals)
        if (std::abs(r) >= tol) return false;
    return true;
}

ConstraintReport verify(const Mask& m, double tol) {
    ConstraintReport rep;
    rep.tol = tol;
    rep.averaging_residual = averaging_residual(m);
    rep.sum_of_squares_residual = sum_of_squares_residual(m);
    rep.regularity_residuals = regularity_residuals(m);
    rep.parity_sums = parity_sums(m);

    for (const ShiftPair& s : canonical_shifts)
        rep.orthogonality_residuals[s] = orthogonality_residual(m, s);
    for (int b = -2; b <= 2; ++b)
        for (int d = -2; d <= 2; ++d) {
            const ShiftPair s{b, d};
            if (b == 0 && d == 0) continue;
            if (std::find(std::begin(canonical_shifts), std::end(canonical_shifts), s) !=
                std::end(canonical_shifts))
                continue;
            rep.extra_shift_residuals[s] = orthogonality_residual(m, s);
        }

    double mx = std::max(std::abs(rep.averaging_residual), std::abs(rep.sum_of_squares_residual));
    for (const auto& [s, v] : rep.orthogonality_residuals) mx = std::max(mx, std::abs(v));
    for (double r : rep.regularity_residuals) mx = std::max(mx, std::abs(r));
    for (const auto& [s, v] : rep.extra_shift_residuals) mx = std::max(mx, std::abs(v));
    rep.max_abs_residual = mx;
    return rep;
}

} // namespace bivd4
