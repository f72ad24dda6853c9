#pragma once

#include "spectra/heat/quadrature.hpp"

#include <vector>

namespace spectra::heat {

/// Free heat kernel on R^n: (4 pi t)^{-n/2} exp(-||x-y||^2 / 4t). t > 0.
double free_kernel(const std::vector<double>& x, const std::vector<double>& y, double t);

/// Dirichlet heat kernel of the half-plane {x2 >= 0} by one reflection:
/// (exp(-||x-y||^2/4t) - exp(-||x-ybar||^2/4t)) / (4 pi t), ybar the mirror
/// image of y across the boundary.
double halfspace_kernel(const std::vector<double>& x, const std::vector<double>& y, double t);

/// Diagonal of the Dirichlet heat kernel of the infinite sector of opening
/// theta in (pi/2, pi), at polar point (r, phi), 0 < phi < theta. The branch
/// is chosen by the phi range (one image term, two, or one), plus the two
/// Carslaw integral terms; branch boundaries take the lower branch.
/// The complex-shifted integral contributes only its real part; the
/// imaginary part of the symmetric integral is checked to vanish below
/// 1e-10 and a std::runtime_error reports a violation.
double sector_kernel_diag(double r, double phi, double theta, double t,
                          const QuadratureConfig& cfg = {});

}  // namespace spectra::heat
