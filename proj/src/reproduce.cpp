#include "bivd4/reproduce.hpp"

#include "bivd4/errors.hpp"

#include <cmath>
#include <string>

namespace bivd4 {

ReproductionPlan make_plan(const LinearFunctional& g, const KeyPointVector& key) {
    if (std::abs(key.sum() - 1.0) >= 1e-8)
        throw InvalidKeyVector("key-point values sum to " + std::to_string(key.sum()) +
                               ", expected 1");
    ReproductionPlan plan;
    plan.g = g;
    plan.key = key;
    plan.gamma_x = key.phi11() + 2.0 * key.phi21() + key.phi12() + 2.0 * key.phi22();
    plan.gamma_y = key.phi11() + key.phi21() + 2.0 * key.phi12() + 2.0 * key.phi22();
    return plan;
}

ReconstructionGrid evaluate(const ReproductionPlan& plan, const DyadicSurface& surface,
                            const TranslateRange& u_range, const TranslateRange& v_range,
                            const Window& window) {
    // A point x draws on translates u with 0 < x-u < 3, i.e. u in [ceil(x)-3, floor(x)].
    const auto check_axis = [](const TranslateRange& r, double lo, double hi, char axis) {
        const int need_lo = static_cast<int>(std::ceil(lo)) - 3;
        const int need_hi = static_cast<int>(std::floor(hi));
        if (r.lo > need_lo || r.hi < need_hi)
            throw InsufficientRange(std::string("translate range [") + std::to_string(r.lo) +
                                    "," + std::to_string(r.hi) + "] on axis " + axis +
                                    " does not cover [" + std::to_string(need_lo) + "," +
                                    std::to_string(need_hi) + "]");
    };
    check_axis(u_range, window.x_lo, window.x_hi, 'x');
    check_axis(v_range, window.y_lo, window.y_hi, 'y');

    const int scale = 1 << surface.level;
    ReconstructionGrid grid;
    grid.level = surface.level;
    grid.px_lo = static_cast<int>(std::ceil(window.x_lo * scale));
    grid.px_hi = static_cast<int>(std::floor(window.x_hi * scale));
    grid.py_lo = static_cast<int>(std::ceil(window.y_lo * scale));
    grid.py_hi = static_cast<int>(std::floor(window.y_hi * scale));
    grid.values.assign(static_cast<std::size_t>(grid.nx()) * static_cast<std::size_t>(grid.ny()),
                       0.0);

    for (int px = grid.px_lo; px <= grid.px_hi; ++px)
        for (int py = grid.py_lo; py <= grid.py_hi; ++py) {
            double acc = 0.0;
            for (int u = u_range.lo; u <= u_range.hi; ++u) {
                const int sm = px - u * scale;
                if (sm <= 0 || sm >= surface.extent() - 1) continue;
                for (int v = v_range.lo; v <= v_range.hi; ++v) {
                    const int sn = py - v * scale;
                    if (sn <= 0 || sn >= surface.extent() - 1) continue;
                    acc += plan.coefficient(u, v) * surface.at(sm, sn);
                }
            }
            grid.values[static_cast<std::size_t>(px - grid.px_lo) *
                            static_cast<std::size_t>(grid.ny()) +
                        static_cast<std::size_t>(py - grid.py_lo)] = acc;
        }
    return grid;
}

double max_error(const ReconstructionGrid& grid, const LinearFunctional& g) {
    double mx = 0.0;
    for (int i = 0; i < grid.nx(); ++i)
        for (int j = 0; j < grid.ny(); ++j)
            mx = std::max(mx, std::abs(grid.at(i, j) - g(grid.x_of(i), grid.y_of(j))));
    return mx;
}

} // namespace bivd4
