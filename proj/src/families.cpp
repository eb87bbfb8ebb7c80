#include "bivd4/families.hpp"

#include "bivd4/errors.hpp"

#include <cmath>

namespace bivd4 {

namespace {

const double sqrt3 = std::sqrt(3.0);

double delta1(double c32, double c33) {
    return -34.0 + 32.0 * c33 * sqrt3 - 20.0 * sqrt3 + 32.0 * c32 * sqrt3 -
           48.0 * c33 * c33 + 32.0 * c33 - 32.0 * c33 * c32 + 48.0 * c32 - 48.0 * c32 * c32;
}

double delta2(double c32, double c33) {
    return -48.0 * c32 * c32 - 32.0 * c32 * sqrt3 - 32.0 * c33 * c32 + 48.0 * c32 - 34.0 -
           32.0 * c33 * sqrt3 + 20.0 * sqrt3 - 48.0 * c33 * c33 + 32.0 * c33;
}

double delta3(double c32, double c33) {
    return -48.0 * c32 * c32 - 32.0 * c33 * c32 - 48.0 * c33 * c33 + 2.0 - 16.0 * c33;
}

} // namespace

double discriminant(SolutionFamily f, const FreeParameters& p) {
    switch (f) {
        case SolutionFamily::A1a:
        case SolutionFamily::A1b: return delta1(p.c32, p.c33);
        case SolutionFamily::A2a:
        case SolutionFamily::A2b: return delta2(p.c32, p.c33);
        default: return delta3(p.c32, p.c33);
    }
}

bool is_feasible(SolutionFamily f, const FreeParameters& p) {
    return discriminant(f, p) >= -feasibility_slack;
}

CoreCoefficients solve_core_six(SolutionFamily f, const FreeParameters& p) {
    const double delta = discriminant(f, p);
    if (delta < -feasibility_slack)
        throw InfeasibleParameters("family " + family_name(f) + " infeasible at c32=" +
                                   std::to_string(p.c32) + " c33=" + std::to_string(p.c33) +
                                   " (discriminant " + std::to_string(delta) + ")");
    const double root = std::sqrt(std::max(delta, 0.0));
    const double signed_root = is_plus_branch(f) ? root : -root;
    const double mu = uses_mu1(f) ? mu1 : mu2;

    CoreCoefficients core;
    if (is_a_family(f)) {
        core.c23 = 0.25 + 2.0 * mu - 0.5 * (p.c32 + p.c33) + 0.125 * signed_root;
        core.c22 = 0.75 + 4.0 * mu - p.c32 - p.c33 - core.c23;
        core.c31 = mu - p.c33;
        core.c13 = core.c31;
    } else {
        core.c23 = -0.5 * (p.c32 + p.c33) + 0.125 * signed_root;
        core.c22 = 0.25 - p.c32 - p.c33 - core.c23;
        core.c31 = mu - p.c33;
        core.c13 = 0.5 - 2.0 * p.c33 - core.c31;
    }
    return core;
}

OuterCoefficients back_substitute(const CoreCoefficients& core, const FreeParameters& p) {
    const double c13 = core.c13, c22 = core.c22, c23 = core.c23, c31 = core.c31;
    const double c32 = p.c32, c33 = p.c33;

    OuterCoefficients o;
    o.c00 = -c31 - 2.0 * c33 - c13 + c22;
    o.c01 = -c31 - 2.0 * c33 + 0.5 + c23 - c13;
    o.c02 = c13 + c33 + 0.5 - c22;
    o.c03 = c33 - c23 + c13;
    o.c10 = -c31 - 2.0 * c33 + c32 - c13 + 0.5;
    o.c11 = -c13 - c31 - c33 + 1.0;
    o.c12 = -c32 + c13 + c33 + 0.5;
    o.c20 = c31 + c33 - c22 + 0.5;
    o.c21 = c31 + c33 + 0.5 - c23;
    o.c30 = c31 + c33 - c32;
    return o;
}

Mask assemble_mask(const CoreCoefficients& core, const OuterCoefficients& outer,
                   const FreeParameters& p) {
    Mask m;
    m.c[0] = {outer.c00, outer.c01, outer.c02, outer.c03};
    m.c[1] = {outer.c10, outer.c11, outer.c12, core.c13};
    m.c[2] = {outer.c20, outer.c21, core.c22, core.c23};
    m.c[3] = {outer.c30, core.c31, p.c32, p.c33};
    return m;
}

Mask build_mask(SolutionFamily f, const FreeParameters& p) {
    const CoreCoefficients core = solve_core_six(f, p);
    Mask m = assemble_mask(core, back_substitute(core, p), p);
    m.family = f;
    m.params = p;
    return m;
}

} // namespace bivd4
