#include "spectra/heat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace spectra::heat {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }
    double integral = result_kronrod * h;
    double error = std::abs((result_kronrod - result_gauss) * h);
    // QUADPACK-style sharpening of the raw difference
    error = std::min(error, std::pow(200.0 * error, 1.5));
    return {integral, error};
}

struct Panel {
    double error;
    double a, b;
    double integral;
    bool operator<(const Panel& o) const {
        if (error != o.error) return error < o.error;
        return a > o.a;  // deterministic tie-break
    }
};

}  // namespace

double integrate_adaptive(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                          const std::vector<double>& breaks) {
    if (cfg.abs_tol <= 0 || cfg.rel_tol <= 0)
        throw std::domain_error("quadrature tolerances must be positive");
    if (a == b) return 0.0;
    std::vector<double> edges{a, b};
    for (double x : breaks)
        if (x > a && x < b) edges.push_back(x);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto r = gk15(f, edges[i], edges[i + 1]);
        queue.push({r.error, edges[i], edges[i + 1], r.integral});
        total += r.integral;
        total_err += r.error;
    }
    int used = static_cast<int>(edges.size()) - 1;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
           used < cfg.max_subdivisions) {
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at floating point resolution; keep its estimate
            total_err -= worst.error;
            continue;
        }
        auto left = gk15(f, worst.a, mid);
        auto right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push({left.error, worst.a, mid, left.integral});
        queue.push({right.error, mid, worst.b, right.integral});
        ++used;
    }
    return total;
}

double integrate_half_line(const Integrand& f, const QuadratureConfig& cfg,
                           const std::vector<double>& breaks) {
    // Panel edges: seeded breaks, then doubling; stop once the integrand at
    // the running edge is below abs_tol/10 (and the edge is past the seeds).
    std::vector<double> edges{0.0};
    for (double x : breaks)
        if (x > 0.0 && std::isfinite(x)) edges.push_back(x);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    double edge = std::max(1.0, edges.back() * 2);
    const double cut = cfg.abs_tol / 10.0;
    int guard = 0;
    while ((std::abs(f(edge)) >= cut) && guard++ < 200) {
        edges.push_back(edge);
        edge *= 2;
    }
    edges.push_back(edge);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += integrate_adaptive(f, edges[i], edges[i + 1], cfg);
    return total;
}

namespace {

double simpson(double a, double fa, double fb, double b, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const Integrand& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, fm, m, flm);
    double right = simpson(m, fm, fb, b, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive_simpson(const Integrand& f, double a, double b, double tol,
                                  int max_depth) {
    if (a == b) return 0.0;
    // trisection seed so the two schemes do not share subdivision points
    double third = (b - a) / 3.0;
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
        double lo = a + k * third;
        double hi = (k == 2) ? b : lo + third;
        double mid = 0.5 * (lo + hi);
        double flo = f(lo), fhi = f(hi), fmid = f(mid);
        double whole = simpson(lo, flo, fhi, hi, fmid);
        total += adaptive_simpson_rec(f, lo, flo, hi, fhi, mid, fmid, whole, tol / 3.0, max_depth);
    }
    return total;
}

}  // namespace spectra::heat
