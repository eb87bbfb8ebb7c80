#include "bivd4/io.hpp"

#include "bivd4/errors.hpp"
#include "bivd4/families.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace bivd4 {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_dyadic(int m, int level) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", level, std::ldexp(static_cast<double>(m), -level));
    return buf;
}

namespace {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string shift_key(const ShiftPair& s) {
    return std::to_string(s.b) + "," + std::to_string(s.d);
}

} // namespace

nlohmann::json mask_to_json(const Mask& m) {
    nlohmann::json j;
    if (m.family) j["family"] = family_name(*m.family);
    if (m.params) {
        j["c32"] = m.params->c32;
        j["c33"] = m.params->c33;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jx = 0; jx < 4; ++jx) row.push_back(m.at(i, jx));
        rows.push_back(row);
    }
    j["coefficients"] = rows;
    return j;
}

Mask mask_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coefficients"))
        throw FormatError("mask file must be an object with a \"coefficients\" key");
    const nlohmann::json& rows = j.at("coefficients");
    if (!rows.is_array() || rows.size() != 4)
        throw FormatError("\"coefficients\" must be an array of 4 rows");

    Mask m;
    for (int i = 0; i < 4; ++i) {
        const nlohmann::json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || row.size() != 4)
            throw FormatError("coefficient row " + std::to_string(i) + " must have 4 entries");
        for (int jx = 0; jx < 4; ++jx) {
            const nlohmann::json& v = row.at(static_cast<std::size_t>(jx));
            if (!v.is_number())
                throw FormatError("coefficient [" + std::to_string(i) + "][" +
                                  std::to_string(jx) + "] is not a number");
            m.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(jx)] = v.get<double>();
        }
    }
    if (j.contains("family")) {
        const auto f = family_from_name(j.at("family").get<std::string>());
        if (!f) throw FormatError("unknown family \"" + j.at("family").get<std::string>() + "\"");
        m.family = *f;
    }
    if (j.contains("c32") || j.contains("c33")) {
        FreeParameters p;
        p.c32 = j.value("c32", 0.0);
        p.c33 = j.value("c33", 0.0);
        m.params = p;
    }
    return m;
}

Mask read_mask_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open mask file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("mask file " + path.string() + " is not valid JSON: " + e.what());
    }
    return mask_from_json(j);
}

nlohmann::json report_to_json(const ConstraintReport& r, bool include_extra_shifts) {
    nlohmann::json j;
    j["averaging_residual"] = r.averaging_residual;
    j["sum_of_squares_residual"] = r.sum_of_squares_residual;
    nlohmann::json orth;
    for (const auto& [s, v] : r.orthogonality_residuals) orth[shift_key(s)] = v;
    j["orthogonality_residuals"] = orth;
    j["regularity_residuals"] = r.regularity_residuals;
    j["parity_sums"] = {{"w1", r.parity_sums.w1},
                        {"w2", r.parity_sums.w2},
                        {"w3", r.parity_sums.w3},
                        {"w4", r.parity_sums.w4}};
    if (include_extra_shifts) {
        nlohmann::json extra;
        for (const auto& [s, v] : r.extra_shift_residuals) extra[shift_key(s)] = v;
        j["extra_shift_residuals"] = extra;
    }
    j["max_abs_residual"] = r.max_abs_residual;
    j["tol"] = r.tol;
    j["passes"] = r.passes();
    return j;
}

nlohmann::json key_points_to_json(const KeyPointVector& key, const FixedPointStats& stats) {
    nlohmann::json j;
    j["phi_1_1"] = key.phi11();
    j["phi_2_1"] = key.phi21();
    j["phi_1_2"] = key.phi12();
    j["phi_2_2"] = key.phi22();
    j["sum"] = key.sum();
    j["iterations"] = stats.iterations;
    j["residual_inf"] = stats.residual_inf;
    return j;
}

nlohmann::json solution_set_to_json(const SolutionSet& s) {
    nlohmann::json j;
    j["c32"] = s.c32;
    j["c33"] = s.c33;
    nlohmann::json roots = nlohmann::json::array();
    for (const OracleRoot& r : s.roots) {
        nlohmann::json e;
        e["values"] = r.values;
        e["family"] = r.matched_family ? nlohmann::json(family_name(*r.matched_family))
                                       : nlohmann::json(nullptr);
        roots.push_back(e);
    }
    j["roots"] = roots;
    j["unmatched_count"] = s.unmatched_count();
    return j;
}

std::string surface_to_csv(const DyadicSurface& s) {
    std::ostringstream out;
    out << "x,y,phi\n";
    const int e = s.extent();
    for (int m = 0; m < e; ++m)
        for (int n = 0; n < e; ++n)
            out << format_dyadic(m, s.level) << ',' << format_dyadic(n, s.level) << ','
                << format_value(s.at(m, n)) << '\n';
    return out.str();
}

std::string reconstruction_to_csv(const ReconstructionGrid& grid, const LinearFunctional& g) {
    std::ostringstream out;
    out << "x,y,reconstructed,exact,error\n";
    for (int i = 0; i < grid.nx(); ++i)
        for (int j = 0; j < grid.ny(); ++j) {
            const double exact = g(grid.x_of(i), grid.y_of(j));
            out << format_dyadic(grid.px_lo + i, grid.level) << ','
                << format_dyadic(grid.py_lo + j, grid.level) << ','
                << format_value(grid.at(i, j)) << ',' << format_value(exact) << ','
                << format_value(grid.at(i, j) - exact) << '\n';
        }
    return out.str();
}

std::string sweep_to_csv(SolutionFamily f, double lo, double hi, int steps) {
    std::ostringstream out;
    out << "c32,c33,feasible\n";
    const auto grid_point = [&](int k) {
        if (steps == 1) return lo;
        return lo + (hi - lo) * static_cast<double>(k) / (steps - 1);
    };
    for (int a = 0; a < steps; ++a)
        for (int b = 0; b < steps; ++b) {
            const FreeParameters p{grid_point(a), grid_point(b)};
            out << format_g17(p.c32) << ',' << format_g17(p.c33) << ','
                << (is_feasible(f, p) ? '1' : '0') << '\n';
        }
    return out.str();
}

void atomic_write_file(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                                 ec.message());
    }
}

} // namespace bivd4
