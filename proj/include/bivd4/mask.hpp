#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace bivd4 {

// The eight closed-form solution families of the 4x4 mask equations.
// A-families satisfy c13 == c31, B-families satisfy c13 + c31 + 2*c33 == 1/2.
// Digit 1/2 selects the mu branch, trailing a/b the sign of the square root.
enum class SolutionFamily { A1a, A1b, A2a, A2b, B1a, B1b, B2a, B2b };

inline constexpr std::array<SolutionFamily, 8> all_families = {
    SolutionFamily::A1a, SolutionFamily::A1b, SolutionFamily::A2a, SolutionFamily::A2b,
    SolutionFamily::B1a, SolutionFamily::B1b, SolutionFamily::B2a, SolutionFamily::B2b};

std::string family_name(SolutionFamily f);
std::optional<SolutionFamily> family_from_name(const std::string& name);

// True for A1a/A1b/A2a/A2b.
bool is_a_family(SolutionFamily f);
// True for the families built on mu1 = (1+sqrt 3)/4 (A1*, B1*); the rest use mu2.
bool uses_mu1(SolutionFamily f);
// True for the +sqrt(discriminant) branch (trailing 'a').
bool is_plus_branch(SolutionFamily f);
// A1a <-> A1b etc.
SolutionFamily sibling_branch(SolutionFamily f);

inline const double mu1 = 0.25 * (1.0 + std::sqrt(3.0));
inline const double mu2 = 0.25 * (1.0 - std::sqrt(3.0));

// The two free coefficients every family is parameterized by.
struct FreeParameters {
    double c32 = 0.0;
    double c33 = 0.0;
};

// 4x4 refinement mask: phi(x,y) = sum_{i,j} c[i][j] phi(2x-i, 2y-j),
// support [0,3]^2, phi zero on the boundary. c[i][j] indexes shift (i,j).
// family/params record provenance when the mask came from build_mask and
// stay empty for masks loaded from external files.
struct Mask {
    std::array<std::array<double, 4>, 4> c{};
    std::optional<SolutionFamily> family;
    std::optional<FreeParameters> params;

    // Coefficient with out-of-range shifts reading as zero, which is how
    // every shifted sum over the mask treats them.
    double at(int i, int j) const {
        if (i < 0 || i > 3 || j < 0 || j > 3) return 0.0;
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

} // namespace bivd4
