#pragma once

#include "spectra/core/rational.hpp"
#include "spectra/heat/quadrature.hpp"

namespace spectra::heat {

/// The corner-angle integral
///   I(theta) = int_{-inf}^{inf} ds / ((1+cosh s)(cosh(pi s/theta) - cos(pi^2/theta)))
/// for theta in (pi/2, pi]. Evaluated by symmetric doubling of the (0, inf)
/// half with an initial panel split at {0, w, 2w}, w = 1 - cos(pi^2/theta)
/// (the s = 0 peak narrows as theta approaches pi/2 from above).
/// I(pi) = 2/3 exactly.
double carslaw_integral(double theta, const QuadratureConfig& cfg = {});

/// The dominating-bound integral int_0^inf ds / ((1+cosh s)(cosh(3s/4) - 1/2)),
/// which bounds the corner integrand pointwise for theta in (3pi/4, pi).
/// Its value is close to 1.1.
double carslaw_bound_integral(const QuadratureConfig& cfg = {});
/// The bound integrand itself, for pointwise domination checks.
double carslaw_bound_integrand(double s);
/// The corner integrand at angle theta.
double carslaw_integrand(double theta, double s);

/// Corner coefficient c(theta) = -sin(pi^2/theta)/(8 pi) * I(theta);
/// positive on (pi/2, pi), zero at theta = pi.
double corner_coefficient(double theta, const QuadratureConfig& cfg = {});

/// N * c(pi (N-2)/N) for a regular N-gon, N >= 5. Approaches 1/6 as N grows.
double corner_sum_regular_ngon(int n_sides, const QuadratureConfig& cfg = {});

/// Constant heat-trace term (1 - h)/6 for a smoothly bounded domain with h holes.
Rational a0_predictor(long long holes);

}  // namespace spectra::heat
