// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// gating failures. Tolerances are pinned here and nowhere else.

#include "bivd4/cascade.hpp"
#include "bivd4/families.hpp"
#include "bivd4/oracle.hpp"
#include "bivd4/reproduce.hpp"
#include "bivd4/verify.hpp"

#include "golden_masks.hpp"
#include "test_util.hpp"

#include <Eigen/Dense>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace bivd4;

namespace {

constexpr double kGoldenTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kParityTol = 1e-12;
constexpr double kCharPolyTol = 1e-8;
constexpr double kLambda4Slack = 1e-9;
constexpr double kFixedPointResidualTol = 1e-12;
constexpr double kFixedPointSumTol = 1e-10;
constexpr double kEigenMatchTol = 1e-10;
constexpr double kConsistencyTol = 1e-10;
constexpr double kPartitionTol = 1e-8;
constexpr double kRiemannSlack = 0.05;   // report-only
constexpr double kReproductionTol = 1e-6;
constexpr double kOracleMatchTol = 1e-7;
constexpr double kDiagnosticShiftTol = 1e-10;
constexpr int kFixedPointIterCap = 200;
constexpr int kCascadeLevel = 6;
constexpr int kReproductionLevel = 5;
constexpr int kResidualDraws = 50;
constexpr int kOraclePoints = 20;
constexpr int kOracleStarts = 1000;
constexpr std::uint64_t kDrawSeed = 2024;
constexpr std::uint64_t kOracleSeed = 777;

int failures = 0;

void report(int criterion, bool ok, const std::string& detail, bool gating = true) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok && gating) ++failures;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double max14(const ConstraintReport& r) {
    double mx = std::max(std::abs(r.averaging_residual), std::abs(r.sum_of_squares_residual));
    for (const ShiftPair& s : canonical_shifts)
        mx = std::max(mx, std::abs(r.orthogonality_residuals.at(s)));
    for (double v : r.regularity_residuals) mx = std::max(mx, std::abs(v));
    return mx;
}

std::vector<Mask> criterion2_masks() {
    std::vector<Mask> masks;
    for (const golden::GoldenMask& g : golden::all) masks.push_back(golden::as_mask(g));
    std::mt19937_64 rng(kDrawSeed);
    for (int k = 0; k < kResidualDraws; ++k) {
        const auto [f, p] = testutil::random_feasible(rng);
        masks.push_back(build_mask(f, p));
    }
    return masks;
}

} // namespace

int main() {
    // 1. The eight reference masks, entry for entry.
    try {
        double worst = 0.0;
        for (const golden::GoldenMask& g : golden::all) {
            const Mask m = build_mask(g.family, g.params);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst = std::max(worst,
                                     std::abs(m.at(i, j) -
                                              g.c[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(j)]));
        }
        report(1, worst <= kGoldenTol,
               "eight golden masks, max entry deviation " + sci(worst) + " (tol " +
                   sci(kGoldenTol) + ")");
    } catch (const std::exception& e) {
        report(1, false, std::string("exception: ") + e.what());
    }

    std::vector<Mask> masks;
    try {
        masks = criterion2_masks();
    } catch (const std::exception& e) {
        report(2, false, std::string("exception building mask set: ") + e.what());
        report(3, false, "skipped: mask set unavailable");
        report(4, false, "skipped: mask set unavailable");
    }

    if (!masks.empty()) {
        // 2. All fourteen residuals on golden masks plus random feasible draws.
        try {
            double worst = 0.0;
            for (const Mask& m : masks) worst = std::max(worst, max14(verify(m)));
            report(2, worst < kResidualTol,
                   "fourteen residuals on " + std::to_string(masks.size()) +
                       " masks, max " + sci(worst) + " (tol " + sci(kResidualTol) + ")");
        } catch (const std::exception& e) {
            report(2, false, std::string("exception: ") + e.what());
        }

        // 3. Parity sums all equal one.
        try {
            double worst = 0.0;
            for (const Mask& m : masks) {
                const ParitySums w = parity_sums(m);
                for (double v : {w.w1, w.w2, w.w3, w.w4})
                    worst = std::max(worst, std::abs(v - 1.0));
            }
            report(3, worst <= kParityTol,
                   "parity sums on " + std::to_string(masks.size()) + " masks, max |w-1| " +
                       sci(worst) + " (tol " + sci(kParityTol) + ")");
        } catch (const std::exception& e) {
            report(3, false, std::string("exception: ") + e.what());
        }

        // 4. Characteristic polynomial roots and the lambda4 bound.
        try {
            double worst_det = 0.0;
            double worst_l4 = 0.0;
            for (const Mask& m : masks) {
                const TransitionMatrix L = transition_matrix(m);
                const double l4 = lambda4(m);
                for (double lam : {1.0, 0.5, l4})
                    worst_det = std::max(worst_det, std::abs(char_poly_at(L, lam)));
                worst_l4 = std::max(worst_l4, std::abs(l4));
            }
            const double bound = std::sqrt(7.0) / 4.0 + kLambda4Slack;
            report(4, worst_det < kCharPolyTol && worst_l4 <= bound,
                   "spectrum on " + std::to_string(masks.size()) + " masks, max |det| " +
                       sci(worst_det) + " (tol " + sci(kCharPolyTol) + "), max |lambda4| " +
                       sci(worst_l4) + " (bound " + sci(bound) + ")");
        } catch (const std::exception& e) {
            report(4, false, std::string("exception: ") + e.what());
        }
    }

    // 5. Fixed point vs an independent eigensolver, on all eight golden masks.
    try {
        bool ok = true;
        int worst_iters = 0;
        double worst_resid = 0.0, worst_sum = 0.0, worst_match = 0.0;
        for (const golden::GoldenMask& g : golden::all) {
            const Mask m = golden::as_mask(g);
            FixedPointStats stats;
            const KeyPointVector key =
                key_point_fixed_point(m, kFixedPointIterCap, 1e-13, &stats);
            worst_iters = std::max(worst_iters, stats.iterations);
            worst_resid = std::max(worst_resid, stats.residual_inf);
            worst_sum = std::max(worst_sum, std::abs(key.sum() - 1.0));

            const TransitionMatrix L = transition_matrix(m);
            Eigen::Matrix4d M;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) M(r, c) = L.m[static_cast<std::size_t>(r)]
                                                         [static_cast<std::size_t>(c)];
            const Eigen::EigenSolver<Eigen::Matrix4d> es(M);
            int best = 0;
            double best_dist = 1e300;
            for (int k = 0; k < 4; ++k) {
                const double d = std::abs(es.eigenvalues()(k) - std::complex<double>(1.0, 0.0));
                if (d < best_dist) {
                    best_dist = d;
                    best = k;
                }
            }
            const Eigen::Vector4cd vec = es.eigenvectors().col(best);
            const std::complex<double> total = vec.sum();
            for (int k = 0; k < 4; ++k) {
                const std::complex<double> comp = vec(k) / total;
                ok = ok && std::abs(comp.imag()) < 1e-12;
                worst_match = std::max(worst_match,
                                       std::abs(comp.real() -
                                                key.values[static_cast<std::size_t>(k)]));
            }
        }
        ok = ok && worst_iters <= kFixedPointIterCap && worst_resid < kFixedPointResidualTol &&
             worst_sum <= kFixedPointSumTol && worst_match <= kEigenMatchTol;
        report(5, ok,
               "fixed point on 8 masks: max iterations " + std::to_string(worst_iters) +
                   ", max residual " + sci(worst_resid) + " (tol " +
                   sci(kFixedPointResidualTol) + "), max |sum-1| " + sci(worst_sum) +
                   ", max eigensolver mismatch " + sci(worst_match) + " (tol " +
                   sci(kEigenMatchTol) + ")");
    } catch (const std::exception& e) {
        report(5, false, std::string("exception: ") + e.what());
    }

    // 6. Cascade invariants at level 6 on the worked-example mask.
    try {
        const Mask m = build_mask(SolutionFamily::B2b, {0.0, 0.0});
        DyadicSurface s = surface_from_key_points(m, key_point_fixed_point(m));
        double worst_consistency = 0.0;
        for (int k = 0; k < kCascadeLevel; ++k) {
            const DyadicSurface child = refine(s);
            worst_consistency = std::max(worst_consistency, even_index_discrepancy(s, child));
            s = child;
        }

        bool boundary_zero = true;
        const int e = s.extent();
        for (int t = 0; t < e; ++t)
            boundary_zero = boundary_zero && s.at(0, t) == 0.0 && s.at(e - 1, t) == 0.0 &&
                            s.at(t, 0) == 0.0 && s.at(t, e - 1) == 0.0;

        const int lo = 1 << kCascadeLevel;
        double worst_partition = 0.0;
        for (int mm = lo; mm <= 2 * lo; ++mm)
            for (int nn = lo; nn <= 2 * lo; ++nn)
                worst_partition =
                    std::max(worst_partition, std::abs(translate_sum(s, mm, nn) - 1.0));

        const double riemann = riemann_square_sum(s);
        const bool ok = boundary_zero && worst_consistency < kConsistencyTol &&
                        worst_partition <= kPartitionTol;
        report(6, ok,
               std::string("cascade level 6: boundary ") +
                   (boundary_zero ? "exactly zero" : "NONZERO") + ", max even-index gap " +
                   sci(worst_consistency) + " (tol " + sci(kConsistencyTol) +
                   "), max |translate sum - 1| " + sci(worst_partition) + " (tol " +
                   sci(kPartitionTol) + "); report-only Riemann sum of phi^2 = " +
                   sci(riemann) + " (1 +/- " + sci(kRiemannSlack) + " expected)");
    } catch (const std::exception& e) {
        report(6, false, std::string("exception: ") + e.what());
    }

    // 7. Linear reproduction on the worked example and the basis functionals.
    try {
        const Mask m = build_mask(SolutionFamily::B2b, {0.0, 0.0});
        const KeyPointVector key = key_point_fixed_point(m);
        DyadicSurface s = surface_from_key_points(m, key);
        for (int k = 0; k < kReproductionLevel; ++k) s = refine(s);

        const LinearFunctional targets[] = {
            {1.0, 6.0, -10.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
        double worst = 0.0;
        for (const LinearFunctional& g : targets) {
            const ReconstructionGrid grid =
                evaluate(make_plan(g, key), s, {0, 6}, {0, 6}, Window{});
            worst = std::max(worst, max_error(grid, g));
        }
        report(7, worst < kReproductionTol,
               "reconstruction of x+6y-10, 1, x, y at level 5 on [3,6]^2, max error " +
                   sci(worst) + " (tol " + sci(kReproductionTol) + ")");
    } catch (const std::exception& e) {
        report(7, false, std::string("exception: ") + e.what());
    }

    // 8. Multistart solver agrees with the closed forms at random parameters.
    try {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(kOracleSeed);
        std::uniform_real_distribution<double> box(-1.0, 1.0);
        int unmatched = 0;
        int missed = 0;
        for (int point = 0; point < kOraclePoints; ++point) {
            const FreeParameters p{box(rng), box(rng)};
            OracleOptions opts;
            opts.starts = kOracleStarts;
            opts.seed = kOracleSeed + 1 + static_cast<std::uint64_t>(point);
            const SolutionSet sols = solve_all(p.c32, p.c33, opts);
            unmatched += static_cast<int>(sols.unmatched_count());
            for (SolutionFamily f : all_families) {
                if (!is_feasible(f, p)) continue;
                const CoreCoefficients core = solve_core_six(f, p);
                const std::array<double, 4> want{core.c23, core.c22, core.c31, core.c13};
                bool covered = false;
                for (const OracleRoot& r : sols.roots) {
                    double d = 0.0;
                    for (std::size_t k = 0; k < 4; ++k)
                        d = std::max(d, std::abs(r.values[k] - want[k]));
                    if (d < kOracleMatchTol || r.matched_family == f) covered = true;
                }
                if (!covered) ++missed;
            }
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = unmatched == 0 && missed == 0 && elapsed < 60.0;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.1fs", elapsed);
        report(8, ok,
               std::to_string(kOraclePoints) + " parameter points x " +
                   std::to_string(kOracleStarts) + " starts: " + std::to_string(unmatched) +
                   " unmatched roots, " + std::to_string(missed) +
                   " feasible families missed (match tol " + sci(kOracleMatchTol) + ") in " +
                   timing);
    } catch (const std::exception& e) {
        report(8, false, std::string("exception: ") + e.what());
    }

    // 9. Non-gating diagnostic: the diagonal shifts stay at zero too.
    try {
        double worst = 0.0;
        for (const golden::GoldenMask& g : golden::all) {
            const Mask m = golden::as_mask(g);
            worst = std::max(worst, std::abs(orthogonality_residual(m, {1, -1})));
            worst = std::max(worst, std::abs(orthogonality_residual(m, {-1, 1})));
        }
        report(9, worst < kDiagnosticShiftTol,
               "non-gating diagnostic: shifts (1,-1),(-1,1) on 8 masks, max " + sci(worst) +
                   " (tol " + sci(kDiagnosticShiftTol) + ")",
               /*gating=*/false);
    } catch (const std::exception& e) {
        report(9, false, std::string("exception: ") + e.what(), /*gating=*/false);
    }

    if (failures == 0)
        std::printf("acceptance: all gating criteria passed\n");
    else
        std::printf("acceptance: %d gating criterion(s) failed\n", failures);
    return failures;
}
