#pragma once

#include "spectra/heat/boxspec.hpp"
#include "spectra/heat/carslaw.hpp"
#include "spectra/polygeom/polygon.hpp"

namespace spectra::heat {

struct EigensumResult {
    double value = 0;
    double cutoff_lambda = 0;  // eigenvalues above this were dropped
    double tail_bound = 0;     // certified bound on the dropped mass
};

/// Sum of exp(-lambda t) over the box spectrum, truncated at a cutoff whose
/// dropped tail is certified below tail_tol by the Weyl-density bound
/// N(lambda) <= prod_i (l_i sqrt(lambda)/pi + 1).
EigensumResult heat_trace_eigensum(const BoxSpec& box, BoundaryCondition bc, double t,
                                   double tail_tol);

/// The three coefficients of the small-t trace expansion of a polygon:
/// area/(4 pi t) - perimeter/(8 sqrt(pi t)) + corner_constant.
struct HeatExpansion {
    double area = 0;
    double perimeter = 0;
    double corner_constant = 0;
    double evaluate(double t) const;
};

/// Expansion for a convex polygon whose interior angles all lie in the open
/// interval (pi/2, pi), the domain of the sector formulas. Rejects other
/// polygons (a square's right angles are outside the open interval).
HeatExpansion polygon_heat_expansion(const polygeom::Polygon& p, const QuadratureConfig& cfg = {});

}  // namespace spectra::heat
