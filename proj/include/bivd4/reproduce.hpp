#pragma once

#include "bivd4/cascade.hpp"
#include "bivd4/mask.hpp"

#include <vector>

namespace bivd4 {

// Affine target g(x,y) = k*x + l*y + m.
struct LinearFunctional {
    double k = 0.0;
    double l = 0.0;
    double m = 0.0;

    double operator()(double x, double y) const { return k * x + l * y + m; }
};

// Expansion coefficients a(u,v) placing g in the span of the integer
// translates: g = sum_{u,v} a(u,v) phi(x-u, y-v) with
// a(u,v) = k*u + l*v + m + k*gamma_x + l*gamma_y. The gamma offsets are the
// first moments expressed through the key-point values.
struct ReproductionPlan {
    LinearFunctional g;
    KeyPointVector key;
    double gamma_x = 0.0;
    double gamma_y = 0.0;

    double coefficient(int u, int v) const {
        return g.k * u + g.l * v + g.m + g.k * gamma_x + g.l * gamma_y;
    }
};

// Builds the plan from a key-point vector. Throws InvalidKeyVector unless
// the key values sum to 1 within 1e-8 (the normalization the coefficient
// formula assumes).
ReproductionPlan make_plan(const LinearFunctional& g, const KeyPointVector& key);

// Inclusive integer translate interval, used for both axes.
struct TranslateRange {
    int lo = 0;
    int hi = 6;
};

// Axis-aligned evaluation window.
struct Window {
    double x_lo = 3.0, x_hi = 6.0;
    double y_lo = 3.0, y_hi = 6.0;
};

// Reconstructed samples on the surface's dyadic lattice restricted to a
// window: index (i,j) is the point ((px_lo+i)/2^level, (py_lo+j)/2^level).
struct ReconstructionGrid {
    int level = 0;
    int px_lo = 0, px_hi = 0;
    int py_lo = 0, py_hi = 0;
    std::vector<double> values;

    int nx() const { return px_hi - px_lo + 1; }
    int ny() const { return py_hi - py_lo + 1; }
    double x_of(int i) const { return static_cast<double>(px_lo + i) / (1 << level); }
    double y_of(int j) const { return static_cast<double>(py_lo + j) / (1 << level); }

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(ny()) +
                      static_cast<std::size_t>(j)];
    }
};

// Evaluate sum_{u,v} a(u,v) phi(x-u, y-v) on the lattice points inside the
// window, reading phi from the cascaded surface. Throws InsufficientRange
// when the translate range cannot cover the window (a point (x,y) draws on
// translates u in [ceil(x)-3, floor(x)], likewise v).
ReconstructionGrid evaluate(const ReproductionPlan& plan, const DyadicSurface& surface,
                            const TranslateRange& u_range, const TranslateRange& v_range,
                            const Window& window);

// sup |reconstructed - g| over the grid.
double max_error(const ReconstructionGrid& grid, const LinearFunctional& g);

} // namespace bivd4
