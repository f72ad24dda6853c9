#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spectra::heat {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 20000;
    std::string tail_cutoff_rule = "truncate |s| where integrand < abs_tol/10";
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. Optional breaks pre-split the
/// interval so that narrow features at known locations are seen before the
/// error estimate converges.
double integrate_adaptive(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                          const std::vector<double>& breaks = {});

/// Semi-infinite [0, inf): doubling panels after the seeded breaks, truncated
/// once the integrand at the panel edge drops below abs_tol/10 (the tail
/// rule), then each panel integrated adaptively.
double integrate_half_line(const Integrand& f, const QuadratureConfig& cfg,
                           const std::vector<double>& breaks = {});

/// Independent scheme for cross-checks: recursive adaptive Simpson with
/// trisection seeding. Shares nothing with the Gauss-Kronrod path.
double integrate_adaptive_simpson(const Integrand& f, double a, double b, double tol,
                                  int max_depth = 60);

}  // namespace spectra::heat
