#pragma once

#include "bivd4/cascade.hpp"
#include "bivd4/mask.hpp"
#include "bivd4/oracle.hpp"
#include "bivd4/reproduce.hpp"
#include "bivd4/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace bivd4 {

// Mask file schema: {"family": "B2a", "c32": ..., "c33": ...,
//                    "coefficients": [[c00..c03], ..., [c30..c33]]}
// family/c32/c33 are provenance and optional; coefficients row i is c[i][*].
nlohmann::json mask_to_json(const Mask& m);
Mask mask_from_json(const nlohmann::json& j);   // throws FormatError
Mask read_mask_file(const std::filesystem::path& path);

// Report schema uses the ConstraintReport field names; shift maps are keyed
// "b,d". Extra shifts are serialized only when include_extra_shifts is set.
nlohmann::json report_to_json(const ConstraintReport& r, bool include_extra_shifts = false);

nlohmann::json key_points_to_json(const KeyPointVector& key, const FixedPointStats& stats);

nlohmann::json solution_set_to_json(const SolutionSet& s);

// CSV bodies. Surface rows are "x,y,phi" with coordinates printed as exact
// decimal dyadics (level fractional digits) and values in 17-significant-digit
// scientific notation; reconstruction rows are "x,y,reconstructed,exact,error".
std::string surface_to_csv(const DyadicSurface& s);
std::string reconstruction_to_csv(const ReconstructionGrid& grid, const LinearFunctional& g);

// Feasibility grid rows "c32,c33,feasible" over an inclusive [lo,hi] range
// with `steps` points per axis, flag 1/0 per the build feasibility rule.
std::string sweep_to_csv(SolutionFamily f, double lo, double hi, int steps);

// Write-temp-then-rename so an interrupted run never leaves a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

// 17-significant-digit scientific form used by every CSV value.
std::string format_value(double v);
// Exact decimal form of the dyadic m/2^level (level fractional digits).
std::string format_dyadic(int m, int level);

} // namespace bivd4
