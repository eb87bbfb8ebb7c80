#include "bivd4/oracle.hpp"

#include "bivd4/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bivd4 {

// Unknown vector layout: x = (c23, c22, c31, c13) = (s, q, r, p) below;
// parameters t = c32, u = c33. Each residual keeps its displayed term order.
std::array<double, 4> QuadraticSystem::residuals(const std::array<double, 4>& x) const {
    const double s = x[0], q = x[1], r = x[2], p = x[3];
    const double t = c32, u = c33;

    std::array<double, 4> f{};
    f[0] = 20.0 * u * p + 20.0 * u * r - 4.0 * q * p - 8.0 * u * q + 8.0 * r * p - 4.0 * r * q -
           8.0 * u * s - 4.0 * r * s - 4.0 * p * t - 8.0 * u * t - 4.0 * r * t - 2.0 * p -
           2.0 * q - 2.0 * r - 2.0 * u + 4.0 * t * t + 20.0 * u * u + 8.0 * p * p + 4.0 * q * q +
           4.0 * s * s + 8.0 * r * r + 2.5 - 4.0 * s * p - 4.0;
    f[1] = -r * u - u * u + u - u * p - r * t - 2.0 * u * t + 0.5 * t - p * t + t * t - r * s -
           2.0 * u * s + s * s + 0.5 * s - s * p - r * q - 2.0 * u * q + q * q - q * p;
    f[2] = -2.0 * u * p - 10.0 * u * r + 2.0 * q * p + 4.0 * u * q - 4.0 * r * p + 2.0 * r * q +
           4.0 * u * s + 2.0 * r * s + 2.0 * p * t + 4.0 * u * t + 2.0 * r * t - p + q + r - u -
           2.0 * t * t - 6.0 * u * u - 2.0 * q * q - 2.0 * s * s - 4.0 * r * r + 2.0 * s * p +
           0.25;
    f[3] = -10.0 * u * p - 2.0 * u * r + 2.0 * q * p + 4.0 * u * q - 4.0 * r * p + 2.0 * r * q +
           4.0 * u * s + 2.0 * r * s + 2.0 * p * t + 4.0 * u * t + 2.0 * r * t + p + q - r - u -
           2.0 * t * t - 6.0 * u * u - 4.0 * p * p - 2.0 * q * q - 2.0 * s * s + 2.0 * s * p +
           0.25;
    return f;
}

std::array<std::array<double, 4>, 4> QuadraticSystem::jacobian(
    const std::array<double, 4>& x) const {
    const double s = x[0], q = x[1], r = x[2], p = x[3];
    const double t = c32, u = c33;

    std::array<std::array<double, 4>, 4> J{};
    // d/ds, d/dq, d/dr, d/dp per row.
    J[0] = {-8.0 * u - 4.0 * r + 8.0 * s - 4.0 * p,
            -4.0 * p - 8.0 * u - 4.0 * r - 2.0 + 8.0 * q,
            20.0 * u + 8.0 * p - 4.0 * q - 4.0 * s - 4.0 * t - 2.0 + 16.0 * r,
            20.0 * u - 4.0 * q + 8.0 * r - 4.0 * t - 2.0 + 16.0 * p - 4.0 * s};
    J[1] = {-r - 2.0 * u + 2.0 * s + 0.5 - p,
            -r - 2.0 * u + 2.0 * q - p,
            -u - t - s - q,
            -u - t - s - q};
    J[2] = {4.0 * u + 2.0 * r - 4.0 * s + 2.0 * p,
            2.0 * p + 4.0 * u + 2.0 * r + 1.0 - 4.0 * q,
            -10.0 * u - 4.0 * p + 2.0 * q + 2.0 * s + 2.0 * t + 1.0 - 8.0 * r,
            -2.0 * u + 2.0 * q - 4.0 * r + 2.0 * t - 1.0 + 2.0 * s};
    J[3] = {4.0 * u + 2.0 * r - 4.0 * s + 2.0 * p,
            2.0 * p + 4.0 * u + 2.0 * r + 1.0 - 4.0 * q,
            -2.0 * u - 4.0 * p + 2.0 * q + 2.0 * s + 2.0 * t - 1.0,
            -10.0 * u + 2.0 * q - 4.0 * r + 2.0 * t + 1.0 - 8.0 * p + 2.0 * s};
    return J;
}

namespace {

double sup_norm(const std::array<double, 4>& v) {
    return std::max(std::max(std::abs(v[0]), std::abs(v[1])),
                    std::max(std::abs(v[2]), std::abs(v[3])));
}

// Gaussian elimination with partial pivoting; false on a singular pivot.
bool solve4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> b,
            std::array<double, 4>& out) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < 4; ++r) {
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (int r = 3; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < 4; ++c) acc -= a[r][c] * out[c];
        out[r] = acc / a[r][r];
    }
    return true;
}

// Damped Newton from one start. True when the residual sup norm drops
// below tol within the iteration cap.
bool newton(const QuadraticSystem& sys, std::array<double, 4>& x, int max_iters, double tol) {
    std::array<double, 4> f = sys.residuals(x);
    double fnorm = sup_norm(f);
    for (int it = 0; it < max_iters; ++it) {
        if (fnorm < tol) return true;
        if (!std::isfinite(fnorm) || sup_norm(x) > 1e6) return false;

        std::array<double, 4> neg_f{-f[0], -f[1], -f[2], -f[3]};
        std::array<double, 4> step{};
        if (!solve4(sys.jacobian(x), neg_f, step)) return false;

        double alpha = 1.0;
        while (true) {
            const std::array<double, 4> trial{x[0] + alpha * step[0], x[1] + alpha * step[1],
                                              x[2] + alpha * step[2], x[3] + alpha * step[3]};
            const std::array<double, 4> ft = sys.residuals(trial);
            const double ftnorm = sup_norm(ft);
            if (ftnorm < fnorm || ftnorm < tol) {
                x = trial;
                f = ft;
                fnorm = ftnorm;
                break;
            }
            alpha *= 0.5;
            if (alpha < 1e-8) return false;   // stuck on a flat spot
        }
    }
    return fnorm < tol;
}

} // namespace

int SolutionSet::unmatched_count() const {
    int n = 0;
    for (const OracleRoot& r : roots)
        if (!r.matched_family) ++n;
    return n;
}

SolutionSet solve_all(double c32, double c33, const OracleOptions& opts) {
    const QuadraticSystem sys{c32, c33};
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> box(-opts.start_box, opts.start_box);

    std::vector<std::array<double, 4>> converged;
    for (int k = 0; k < opts.starts; ++k) {
        std::array<double, 4> x{box(rng), box(rng), box(rng), box(rng)};
        if (newton(sys, x, opts.max_newton_iters, opts.converged_tol)) converged.push_back(x);
    }

    std::sort(converged.begin(), converged.end());
    std::vector<std::array<double, 4>> distinct;
    for (const auto& x : converged) {
        bool dup = false;
        for (const auto& kept : distinct)
            if (std::abs(x[0] - kept[0]) < opts.dedup_tol &&
                std::abs(x[1] - kept[1]) < opts.dedup_tol &&
                std::abs(x[2] - kept[2]) < opts.dedup_tol &&
                std::abs(x[3] - kept[3]) < opts.dedup_tol) {
                dup = true;
                break;
            }
        if (!dup) distinct.push_back(x);
    }

    SolutionSet set;
    set.c32 = c32;
    set.c33 = c33;
    const FreeParameters p{c32, c33};
    for (const auto& x : distinct) {
        OracleRoot root;
        root.values = x;
        for (SolutionFamily fam : all_families) {
            if (!is_feasible(fam, p)) continue;
            const CoreCoefficients core = solve_core_six(fam, p);
            if (std::abs(x[0] - core.c23) < opts.match_tol &&
                std::abs(x[1] - core.c22) < opts.match_tol &&
                std::abs(x[2] - core.c31) < opts.match_tol &&
                std::abs(x[3] - core.c13) < opts.match_tol) {
                root.matched_family = fam;
                break;
            }
        }
        set.roots.push_back(root);
    }
    return set;
}

} // namespace bivd4
