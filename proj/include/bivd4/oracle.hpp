#pragma once

#include "bivd4/mask.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace bivd4 {

// The reduced quadratic system in the four unknowns (c23, c22, c31, c13)
// with (c32, c33) as parameters: what remains of the fourteen mask equations
// after eliminating the ten linear coefficients. Its real roots are exactly
// the closed-form family solutions, which is what the multistart solver is
// used to check.
struct QuadraticSystem {
    double c32 = 0.0;
    double c33 = 0.0;

    // Residuals of the four equations at point (c23, c22, c31, c13),
    // each written exactly as displayed.
    std::array<double, 4> residuals(const std::array<double, 4>& x) const;

    // Analytic Jacobian d residuals / d (c23, c22, c31, c13).
    std::array<std::array<double, 4>, 4> jacobian(const std::array<double, 4>& x) const;
};

struct OracleRoot {
    std::array<double, 4> values{};                 // (c23, c22, c31, c13)
    std::optional<SolutionFamily> matched_family;   // within match tolerance
};

struct SolutionSet {
    double c32 = 0.0;
    double c33 = 0.0;
    std::vector<OracleRoot> roots;                  // lexicographically sorted

    int unmatched_count() const;
};

struct OracleOptions {
    int starts = 1000;
    std::uint64_t seed = 0;
    int max_newton_iters = 100;
    double start_box = 2.0;          // starts drawn uniformly from [-box, box]^4
    double converged_tol = 1e-10;    // sup-norm residual threshold
    double dedup_tol = 1e-7;         // sup-norm distance merging duplicate roots
    double match_tol = 1e-7;         // sup-norm distance to a family's closed form
};

// Damped-Newton multistart on the quadratic system. Starts that diverge or
// exhaust the iteration cap are discarded; converged points are deduplicated,
// sorted lexicographically, and matched against every feasible family's
// closed-form core. Deterministic for a fixed seed.
SolutionSet solve_all(double c32, double c33, const OracleOptions& opts = {});

} // namespace bivd4
