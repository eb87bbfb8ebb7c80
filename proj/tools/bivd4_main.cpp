#include "bivd4/errors.hpp"
#include "bivd4/families.hpp"
#include "bivd4/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace bivd4;

int fail(const std::string& code, const std::string& detail) {
    std::string msg = detail;
    for (char& ch : msg)
        if (ch == '"' || ch == '\n') ch = '\'';
    std::cerr << "error=" << code << " msg=\"" << msg << "\"\n";
    return 1;
}

std::filesystem::path sidecar_path(const std::filesystem::path& out, const std::string& suffix) {
    std::filesystem::path base = out;
    if (base.extension() == ".csv") base.replace_extension();
    return base.string() + suffix;
}

double max_canonical_residual(const ConstraintReport& rep) {
    double mx = std::max(std::abs(rep.averaging_residual), std::abs(rep.sum_of_squares_residual));
    for (const ShiftPair& s : canonical_shifts)
        mx = std::max(mx, std::abs(rep.orthogonality_residuals.at(s)));
    for (double r : rep.regularity_residuals) mx = std::max(mx, std::abs(r));
    return mx;
}

void warn_if_invalid(const Mask& mask) {
    const ConstraintReport rep = verify(mask);
    if (!rep.passes())
        std::cerr << "warning: mask fails verification (max canonical residual "
                  << format_value(max_canonical_residual(rep)) << ")\n";
}

SolutionFamily parse_family(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f) throw CLI::ValidationError("--family", "unknown family " + name);
    return *f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify, and exercise 4x4 bivariate refinement masks"};
    app.require_subcommand(1);

    std::string family_name_arg;
    double c32 = 0.0, c33 = 0.0, tol = 1e-10;
    double fk = 0.0, fl = 0.0, fm = 0.0;
    std::string mask_path, out_path;
    int levels = 5, max_iters = 200, steps = 0, starts = 1000;
    std::uint64_t seed = 0;
    double fp_tol = 1e-13;
    std::vector<double> range;
    bool all_shifts = false;

    const std::vector<std::string> family_names = {"A1a", "A1b", "A2a", "A2b",
                                                   "B1a", "B1b", "B2a", "B2b"};

    CLI::App* cmd_mask = app.add_subcommand("mask", "build a mask from a solution family");
    cmd_mask->add_option("--family", family_name_arg, "solution family")
        ->required()
        ->check(CLI::IsMember(family_names));
    cmd_mask->add_option("--c32", c32, "free coefficient c32")->capture_default_str();
    cmd_mask->add_option("--c33", c33, "free coefficient c33")->capture_default_str();
    cmd_mask->add_option("--out", out_path, "output mask JSON path")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "check a mask against all constraints");
    cmd_verify->add_option("--mask", mask_path, "mask JSON path")->required();
    cmd_verify->add_option("--tol", tol, "pass/fail tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--all-shifts", all_shifts, "include extra shift residuals in the report");

    CLI::App* cmd_cascade = app.add_subcommand("cascade", "sample phi on a dyadic grid");
    cmd_cascade->add_option("--mask", mask_path, "mask JSON path")->required();
    cmd_cascade->add_option("--levels", levels, "refinement levels")
        ->required()
        ->check(CLI::Range(0, 10));
    cmd_cascade->add_option("--max-iters", max_iters, "key-point iteration cap")
        ->capture_default_str();
    cmd_cascade->add_option("--tol", fp_tol, "key-point iteration tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd_cascade->add_option("--out", out_path, "output surface CSV path")->required();

    CLI::App* cmd_repro =
        app.add_subcommand("reproduce", "reconstruct k*x + l*y + m from translates of phi");
    cmd_repro->add_option("--mask", mask_path, "mask JSON path")->required();
    cmd_repro->add_option("--k", fk, "x coefficient")->capture_default_str();
    cmd_repro->add_option("--l", fl, "y coefficient")->capture_default_str();
    cmd_repro->add_option("--m", fm, "constant term")->capture_default_str();
    cmd_repro->add_option("--levels", levels, "refinement levels")
        ->capture_default_str()
        ->check(CLI::Range(0, 10));
    cmd_repro->add_option("--out", out_path, "output reconstruction CSV path")->required();

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "map the feasible parameter region");
    cmd_sweep->add_option("--family", family_name_arg, "solution family")
        ->required()
        ->check(CLI::IsMember(family_names));
    cmd_sweep->add_option("--range", range, "parameter range lo,hi (both axes)")
        ->required()
        ->delimiter(',')
        ->expected(2);
    cmd_sweep->add_option("--steps", steps, "grid points per axis")
        ->required()
        ->check(CLI::Range(1, 100000));
    cmd_sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "multistart solve of the reduced quadratic system");
    cmd_oracle->add_option("--c32", c32, "parameter c32")->required();
    cmd_oracle->add_option("--c33", c33, "parameter c33")->required();
    cmd_oracle->add_option("--starts", starts, "number of Newton starts")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000000));
    cmd_oracle->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd_oracle->add_option("--out", out_path, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error=usage msg=\"" << e.what() << "\"\n";
        return 2;
    }

    try {
        if (cmd_mask->parsed()) {
            const Mask m = build_mask(parse_family(family_name_arg), {c32, c33});
            atomic_write_file(out_path, mask_to_json(m).dump(2) + "\n");
            return 0;
        }
        if (cmd_verify->parsed()) {
            const Mask m = read_mask_file(mask_path);
            const ConstraintReport rep = verify(m, tol);
            std::cout << report_to_json(rep, all_shifts).dump(2) << "\n";
            if (!rep.passes())
                return fail("verification_failed",
                            "max canonical residual " +
                                format_value(max_canonical_residual(rep)) + " at tol " +
                                format_value(tol));
            return 0;
        }
        if (cmd_cascade->parsed()) {
            const Mask m = read_mask_file(mask_path);
            warn_if_invalid(m);
            FixedPointStats stats;
            const KeyPointVector key = key_point_fixed_point(m, max_iters, fp_tol, &stats);
            DyadicSurface s = surface_from_key_points(m, key);
            for (int k = 0; k < levels; ++k) s = refine(s);
            atomic_write_file(out_path, surface_to_csv(s));
            atomic_write_file(sidecar_path(out_path, ".keypoints.json"),
                              key_points_to_json(key, stats).dump(2) + "\n");
            return 0;
        }
        if (cmd_repro->parsed()) {
            const Mask m = read_mask_file(mask_path);
            warn_if_invalid(m);
            FixedPointStats stats;
            KeyPointVector key = key_point_fixed_point(m, max_iters, fp_tol, &stats);
            DyadicSurface s = surface_from_key_points(m, key);
            for (int k = 0; k < levels; ++k) s = refine(s);
            const LinearFunctional g{fk, fl, fm};
            const ReproductionPlan plan = make_plan(g, key);
            const ReconstructionGrid grid = evaluate(plan, s, {0, 6}, {0, 6}, Window{});
            atomic_write_file(out_path, reconstruction_to_csv(grid, g));
            nlohmann::json summary;
            summary["max_error"] = max_error(grid, g);
            summary["window"] = {3.0, 6.0, 3.0, 6.0};
            summary["level"] = levels;
            atomic_write_file(sidecar_path(out_path, ".summary.json"), summary.dump(2) + "\n");
            return 0;
        }
        if (cmd_sweep->parsed()) {
            atomic_write_file(out_path, sweep_to_csv(parse_family(family_name_arg), range[0],
                                                     range[1], steps));
            return 0;
        }
        if (cmd_oracle->parsed()) {
            OracleOptions opts;
            opts.starts = starts;
            opts.seed = seed;
            const SolutionSet set = solve_all(c32, c33, opts);
            atomic_write_file(out_path, solution_set_to_json(set).dump(2) + "\n");
            return 0;
        }
    } catch (const InfeasibleParameters& e) {
        return fail("infeasible_parameters", e.what());
    } catch (const NoConvergence& e) {
        return fail("no_convergence", e.what());
    } catch (const ZeroShift& e) {
        return fail("zero_shift", e.what());
    } catch (const InvalidKeyVector& e) {
        return fail("invalid_key_vector", e.what());
    } catch (const InsufficientRange& e) {
        return fail("insufficient_range", e.what());
    } catch (const FormatError& e) {
        return fail("format_error", e.what());
    } catch (const std::exception& e) {
        return fail("io_error", e.what());
    }
    return 0;
}
