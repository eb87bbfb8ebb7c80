#pragma once

#include "bivd4/mask.hpp"

namespace bivd4 {

// Discriminant under the square root of the family's closed-form c23.
// A1* uses Delta1, A2* Delta2, B* Delta3. Negative means the parameter
// pair is infeasible for that family.
double discriminant(SolutionFamily f, const FreeParameters& p);

// Parameters are accepted when the discriminant is >= -feasibility_slack;
// values in [-feasibility_slack, 0) are treated as an exact zero before
// taking the square root.
inline constexpr double feasibility_slack = 1e-14;
bool is_feasible(SolutionFamily f, const FreeParameters& p);

// The four dependent core coefficients, in the order they are solved.
struct CoreCoefficients {
    double c23 = 0.0;
    double c22 = 0.0;
    double c31 = 0.0;
    double c13 = 0.0;
};

// Closed-form solve of the core given the two free coefficients.
// Throws InfeasibleParameters when the discriminant is negative.
CoreCoefficients solve_core_six(SolutionFamily f, const FreeParameters& p);

// The ten coefficients determined linearly by the six core values.
struct OuterCoefficients {
    double c00 = 0.0, c01 = 0.0, c02 = 0.0, c03 = 0.0;
    double c10 = 0.0, c11 = 0.0, c12 = 0.0;
    double c20 = 0.0, c21 = 0.0;
    double c30 = 0.0;
};

OuterCoefficients back_substitute(const CoreCoefficients& core, const FreeParameters& p);

// Full pipeline: discriminant check, core solve, back substitution.
// The result carries family/params provenance.
Mask build_mask(SolutionFamily f, const FreeParameters& p);

// Assemble a mask from explicitly given core and outer coefficients.
Mask assemble_mask(const CoreCoefficients& core, const OuterCoefficients& outer,
                   const FreeParameters& p);

} // namespace bivd4
