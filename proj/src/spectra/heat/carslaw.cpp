#include "spectra/heat/carslaw.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra::heat {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

double carslaw_integrand(double theta, double s) {
    return 1.0 /
           ((1.0 + std::cosh(s)) * (std::cosh(kPi * s / theta) - std::cos(kPi * kPi / theta)));
}

double carslaw_integral(double theta, const QuadratureConfig& cfg) {
    if (!(theta > kPi / 2 && theta <= kPi))
        throw std::domain_error(
            "carslaw_integral: theta must lie in (pi/2, pi]; at pi/2 the integrand "
            "diverges at s = 0");
    const double w = 1.0 - std::cos(kPi * kPi / theta);
    auto f = [theta](double s) { return carslaw_integrand(theta, s); };
    return 2.0 * integrate_half_line(f, cfg, {w, 2.0 * w});
}

double carslaw_bound_integrand(double s) {
    return 1.0 / ((1.0 + std::cosh(s)) * (std::cosh(0.75 * s) - 0.5));
}

double carslaw_bound_integral(const QuadratureConfig& cfg) {
    return integrate_half_line(&carslaw_bound_integrand, cfg, {1.0, 2.0});
}

double corner_coefficient(double theta, const QuadratureConfig& cfg) {
    return -std::sin(kPi * kPi / theta) / (8.0 * kPi) * carslaw_integral(theta, cfg);
}

double corner_sum_regular_ngon(int n_sides, const QuadratureConfig& cfg) {
    if (n_sides < 5)
        throw std::domain_error(
            "corner_sum_regular_ngon requires N >= 5 so the interior angle exceeds pi/2");
    double theta = kPi * (n_sides - 2) / n_sides;
    return n_sides * corner_coefficient(theta, cfg);
}

Rational a0_predictor(long long holes) { return Rational(1 - Int(holes), 6); }

}  // namespace spectra::heat
