#include "spectra/heat/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra::heat {
namespace {

constexpr double kPi = 3.14159265358979323846;

double sq_dist(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

}  // namespace

double free_kernel(const std::vector<double>& x, const std::vector<double>& y, double t) {
    if (t <= 0) throw std::domain_error("heat kernel requires t > 0");
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("free_kernel: mismatched point dimensions");
    const auto n = static_cast<double>(x.size());
    return std::pow(4.0 * kPi * t, -n / 2.0) * std::exp(-sq_dist(x, y) / (4.0 * t));
}

double halfspace_kernel(const std::vector<double>& x, const std::vector<double>& y, double t) {
    if (t <= 0) throw std::domain_error("heat kernel requires t > 0");
    if (x.size() != 2 || y.size() != 2)
        throw std::invalid_argument("halfspace_kernel expects points in the closed half-plane");
    if (x[1] < 0 || y[1] < 0)
        throw std::domain_error("halfspace_kernel: points must satisfy x2 >= 0");
    std::vector<double> mirror{y[0], -y[1]};
    return (std::exp(-sq_dist(x, y) / (4.0 * t)) - std::exp(-sq_dist(x, mirror) / (4.0 * t))) /
           (4.0 * kPi * t);
}

double sector_kernel_diag(double r, double phi, double theta, double t,
                          const QuadratureConfig& cfg) {
    if (t <= 0) throw std::domain_error("heat kernel requires t > 0");
    if (!(theta > kPi / 2 && theta < kPi))
        throw std::domain_error("sector_kernel_diag: opening angle must lie in (pi/2, pi)");
    if (!(phi > 0 && phi < theta))
        throw std::domain_error("sector_kernel_diag: phi must lie in (0, theta)");
    if (r <= 0) throw std::domain_error("sector_kernel_diag: r must be positive");

    const double a = r * r / (2.0 * t);
    const double free_term = 1.0 / (4.0 * kPi * t);
    const double cos_c = std::cos(kPi * kPi / theta);
    const double sin_c = std::sin(kPi * kPi / theta);

    // image terms by phi range; boundaries take the lower branch
    double images = 0.0;
    if (phi <= theta - kPi / 2)
        images = std::exp(-a * (1.0 - std::cos(2.0 * phi)));
    else if (phi <= kPi / 2)
        images = std::exp(-a * (1.0 - std::cos(2.0 * phi))) +
                 std::exp(-a * (1.0 - std::cos(2.0 * (theta - phi))));
    else
        images = std::exp(-a * (1.0 - std::cos(2.0 * (theta - phi))));
    images /= 4.0 * kPi * t;

    const double b = 2.0 * kPi * phi / theta;
    const double cos_b = std::cos(b);
    const double sin_b = std::sin(b);

    auto j1 = [&](double s) {
        return std::exp(-a * std::cosh(s)) / (std::cosh(kPi * s / theta) - cos_c);
    };
    auto j2_re = [&](double s) {
        double ch = std::cosh(kPi * s / theta), sh = std::sinh(kPi * s / theta);
        double re = ch * cos_b - cos_c;
        double im = sh * sin_b;
        return std::exp(-a * std::cosh(s)) * re / (re * re + im * im);
    };
    auto j2_im = [&](double s) {
        double ch = std::cosh(kPi * s / theta), sh = std::sinh(kPi * s / theta);
        double re = ch * cos_b - cos_c;
        double im = sh * sin_b;
        return std::exp(-a * std::cosh(s)) * (-im) / (re * re + im * im);
    };

    // The shifted integrand develops a near-pole at s = 0 when cos(b)
    // approaches cos(pi^2/theta), i.e. at the branch boundaries. Seed panel
    // edges at the Lorentzian width so refinement can resolve it.
    std::vector<double> breaks;
    double gap = std::abs(cos_b - cos_c);
    double slope = (kPi / theta) * std::abs(sin_b);
    if (slope > 0 && gap / slope < 0.5) {
        double w = std::max(gap / slope, 1e-300);
        for (double s = w; s < 1.0; s *= 8.0) breaks.push_back(s);
    }

    double i1 = 2.0 * integrate_half_line(j1, cfg, {1.0 - cos_c});
    double i2 = 2.0 * integrate_half_line(j2_re, cfg, breaks);

    // the imaginary part is odd in s; its symmetric integral must vanish
    double tail = 1.0;
    while (std::abs(j2_im(tail)) >= cfg.abs_tol / 10.0 && tail < 1e6) tail *= 2;
    std::vector<double> sym_breaks;
    for (double s : breaks) {
        sym_breaks.push_back(s);
        sym_breaks.push_back(-s);
    }
    double imag = integrate_adaptive(j2_im, -tail, tail, cfg, sym_breaks);
    if (std::abs(imag) >= 1e-10)
        throw std::runtime_error("sector_kernel_diag: imaginary part of the shifted integral "
                                 "did not vanish within tolerance");

    const double pref = sin_c * std::exp(-a) / (8.0 * kPi * theta * t);
    return free_term - images - pref * i1 + pref * i2;
}

}  // namespace spectra::heat
