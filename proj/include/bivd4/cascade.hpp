#pragma once

#include "bivd4/mask.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace bivd4 {

// Values of phi at the four interior integer points, in the fixed order
// [phi(1,1), phi(2,1), phi(1,2), phi(2,2)]. These determine phi on the
// whole dyadic lattice through the refinement relation.
struct KeyPointVector {
    std::array<double, 4> values{};

    double phi11() const { return values[0]; }
    double phi21() const { return values[1]; }
    double phi12() const { return values[2]; }
    double phi22() const { return values[3]; }
    double sum() const { return values[0] + values[1] + values[2] + values[3]; }
};

// 4x4 matrix restating the refinement relation at the key points:
// key = L * key. Row r gives phi at key point r as a combination of the
// key-point values in the same fixed order.
struct TransitionMatrix {
    std::array<std::array<double, 4>, 4> m{};

    std::array<double, 4> apply(const std::array<double, 4>& v) const;
    std::array<double, 4> column_sums() const;
};

TransitionMatrix transition_matrix(const Mask& mask);

// det(L - lambda*I), cofactor expansion. Vanishes at the eigenvalues
// {1, 1/2 (double), lambda4}.
double char_poly_at(const TransitionMatrix& L, double lambda);

// The one mask-dependent eigenvalue: c22 + c33 - c32 - c23. Bounded by
// sqrt(7)/4 in absolute value over the feasible families.
double lambda4(const Mask& mask);

struct FixedPointStats {
    int iterations = 0;
    double last_step_inf = 0.0;    // sup-norm of the final iteration step
    double residual_inf = 0.0;     // sup-norm of L*b - b at the returned b
};

// Power iteration b <- L*b from (1,0,0,0), which preserves the component sum
// and converges to the eigenvalue-1 eigenvector normalized to sum 1. Stops
// when successive iterates differ by less than tol in sup norm. Throws
// NoConvergence when lambda4 is within 1e-12 of 1 (fixed point not unique)
// or the iteration cap is hit.
KeyPointVector key_point_fixed_point(const Mask& mask, int max_iters = 200,
                                     double tol = 1e-13, FixedPointStats* stats = nullptr);

// Samples of phi on the dyadic lattice (m/2^k, n/2^k), m,n in [0, 3*2^k],
// stored row-major with the x index outermost. Boundary samples are zero.
struct DyadicSurface {
    int level = 0;
    std::vector<double> values;
    Mask mask;

    // Points per axis: 3*2^level + 1.
    int extent() const { return 3 * (1 << level) + 1; }

    double at(int m, int n) const {
        const int e = extent();
        if (m < 0 || m >= e || n < 0 || n >= e) return 0.0;
        return values[static_cast<std::size_t>(m) * static_cast<std::size_t>(e) +
                      static_cast<std::size_t>(n)];
    }

    double& ref(int m, int n) {
        return values[static_cast<std::size_t>(m) * static_cast<std::size_t>(extent()) +
                      static_cast<std::size_t>(n)];
    }
};

// Level-0 surface: the key-point values embedded in the 4x4 integer grid,
// zeros elsewhere.
DyadicSurface surface_from_key_points(const Mask& mask, const KeyPointVector& key);

// One refinement step, level k -> k+1: every child sample (even and odd
// indices alike) is recomputed through the refinement relation
//   child[m][n] = sum_{i,j} c[i][j] * parent[m - i*2^k][n - j*2^k],
// out-of-range parent samples reading as zero.
DyadicSurface refine(const DyadicSurface& parent);

// Largest |child[2a][2b] - parent[a][b]| over the parent grid; a diagnostic
// for how exactly the refinement relation is honored at the parent points.
double even_index_discrepancy(const DyadicSurface& parent, const DyadicSurface& child);

// Fixed point at the key points followed by `levels` refinement steps.
// levels is capped at 10 (the grid is (3*2^k+1)^2).
DyadicSurface cascade(const Mask& mask, int levels, int max_iters = 200,
                      double tol = 1e-13, FixedPointStats* stats = nullptr);

// sum of the 3x3 integer-translate samples around lattice point (m,n):
// sum_{di,dj in {-1,0,1}} surface(m - di*2^k, n - dj*2^k). Equals 1 for
// points with x,y in [1,2] when the mask is valid.
double translate_sum(const DyadicSurface& s, int m, int n);

// Plain Riemann sum of phi^2 over the whole grid, h = 2^-level per axis.
// Approximates the squared L2 norm, which is 1 for an orthonormal family.
double riemann_square_sum(const DyadicSurface& s);

} // namespace bivd4
