#include "bivd4/cascade.hpp"

#include "bivd4/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bivd4 {

std::array<double, 4> TransitionMatrix::apply(const std::array<double, 4>& v) const {
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r)
        out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] + m[r][3] * v[3];
    return out;
}

std::array<double, 4> TransitionMatrix::column_sums() const {
    std::array<double, 4> s{};
    for (int c = 0; c < 4; ++c) s[c] = m[0][c] + m[1][c] + m[2][c] + m[3][c];
    return s;
}

// Writing the refinement relation at the key points (1,1),(2,1),(1,2),(2,2)
// and keeping only the interior samples gives one mask coefficient per slot.
TransitionMatrix transition_matrix(const Mask& k) {
    TransitionMatrix L;
    L.m[0] = {k.at(1, 1), k.at(0, 1), k.at(1, 0), k.at(0, 0)};
    L.m[1] = {k.at(3, 1), k.at(2, 1), k.at(3, 0), k.at(2, 0)};
    L.m[2] = {k.at(1, 3), k.at(0, 3), k.at(1, 2), k.at(0, 2)};
    L.m[3] = {k.at(3, 3), k.at(2, 3), k.at(3, 2), k.at(2, 2)};
    return L;
}

double char_poly_at(const TransitionMatrix& L, double lambda) {
    double a[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[r][c] = L.m[r][c] - (r == c ? lambda : 0.0);

    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return a[r0][c0] * (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) -
               a[r0][c1] * (a[r1][c0] * a[r2][c2] - a[r1][c2] * a[r2][c0]) +
               a[r0][c2] * (a[r1][c0] * a[r2][c1] - a[r1][c1] * a[r2][c0]);
    };
    return a[0][0] * det3(1, 2, 3, 1, 2, 3) - a[0][1] * det3(1, 2, 3, 0, 2, 3) +
           a[0][2] * det3(1, 2, 3, 0, 1, 3) - a[0][3] * det3(1, 2, 3, 0, 1, 2);
}

double lambda4(const Mask& mask) {
    return mask.at(2, 2) + mask.at(3, 3) - mask.at(3, 2) - mask.at(2, 3);
}

KeyPointVector key_point_fixed_point(const Mask& mask, int max_iters, double tol,
                                     FixedPointStats* stats) {
    if (std::abs(lambda4(mask) - 1.0) < 1e-12)
        throw NoConvergence("transition matrix has a second eigenvalue at 1; "
                            "fixed point is not unique");

    const TransitionMatrix L = transition_matrix(mask);
    std::array<double, 4> b = {1.0, 0.0, 0.0, 0.0};
    int it = 0;
    double step = 0.0;
    for (; it < max_iters; ++it) {
        const std::array<double, 4> next = L.apply(b);
        step = 0.0;
        for (int r = 0; r < 4; ++r) step = std::max(step, std::abs(next[r] - b[r]));
        b = next;
        if (step < tol) break;
        if (!std::isfinite(step) || step > 1e12)
            throw NoConvergence("key-point iteration diverged after " + std::to_string(it + 1) +
                                " steps");
    }
    if (step >= tol)
        throw NoConvergence("key-point iteration did not settle within " +
                            std::to_string(max_iters) + " iterations (last step " +
                            std::to_string(step) + ")");

    if (stats) {
        const std::array<double, 4> lb = L.apply(b);
        double resid = 0.0;
        for (int r = 0; r < 4; ++r) resid = std::max(resid, std::abs(lb[r] - b[r]));
        stats->iterations = it + 1;
        stats->last_step_inf = step;
        stats->residual_inf = resid;
    }
    return KeyPointVector{b};
}

DyadicSurface surface_from_key_points(const Mask& mask, const KeyPointVector& key) {
    DyadicSurface s;
    s.level = 0;
    s.mask = mask;
    s.values.assign(16, 0.0);
    s.ref(1, 1) = key.phi11();
    s.ref(2, 1) = key.phi21();
    s.ref(1, 2) = key.phi12();
    s.ref(2, 2) = key.phi22();
    return s;
}

DyadicSurface refine(const DyadicSurface& parent) {
    DyadicSurface child;
    child.level = parent.level + 1;
    child.mask = parent.mask;
    const int e = child.extent();
    child.values.assign(static_cast<std::size_t>(e) * static_cast<std::size_t>(e), 0.0);

    const int half = 1 << parent.level;   // one parent lattice step, in child x2 units
    for (int m = 0; m < e; ++m)
        for (int n = 0; n < e; ++n) {
            double acc = 0.0;
            for (int i = 0; i < 4; ++i) {
                const int pm = m - i * half;
                if (pm < 0) break;   // larger i only moves further out of range
                for (int j = 0; j < 4; ++j) {
                    const int pn = n - j * half;
                    if (pn < 0) break;
                    acc += parent.mask.at(i, j) * parent.at(pm, pn);
                }
            }
            child.ref(m, n) = acc;
        }
    return child;
}

double even_index_discrepancy(const DyadicSurface& parent, const DyadicSurface& child) {
    if (child.level != parent.level + 1)
        throw std::invalid_argument("child surface is not one level below parent");
    double mx = 0.0;
    const int e = parent.extent();
    for (int m = 0; m < e; ++m)
        for (int n = 0; n < e; ++n)
            mx = std::max(mx, std::abs(child.at(2 * m, 2 * n) - parent.at(m, n)));
    return mx;
}

DyadicSurface cascade(const Mask& mask, int levels, int max_iters, double tol,
                      FixedPointStats* stats) {
    if (levels < 0 || levels > 10)
        throw std::invalid_argument("levels must lie in [0, 10]");
    DyadicSurface s = surface_from_key_points(mask, key_point_fixed_point(mask, max_iters, tol, stats));
    for (int k = 0; k < levels; ++k) s = refine(s);
    return s;
}

double translate_sum(const DyadicSurface& s, int m, int n) {
    const int step = 1 << s.level;
    double acc = 0.0;
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) acc += s.at(m - di * step, n - dj * step);
    return acc;
}

double riemann_square_sum(const DyadicSurface& s) {
    const double h = 1.0 / (1 << s.level);
    double acc = 0.0;
    for (double v : s.values) acc += v * v;
    return acc * h * h;
}

} // namespace bivd4
