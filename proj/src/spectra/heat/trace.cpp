#include "spectra/heat/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra::heat {
namespace {
constexpr double kPi = 3.14159265358979323846;

double counting_upper_bound(const BoxSpec& box, double lambda) {
    double p = 1;
    for (double l : box.sides) p *= l * std::sqrt(lambda) / kPi + 1.0;
    return p;
}

}  // namespace

EigensumResult heat_trace_eigensum(const BoxSpec& box, BoundaryCondition bc, double t,
                                   double tail_tol) {
    if (t <= 0) throw std::domain_error("heat_trace_eigensum requires t > 0");
    if (tail_tol <= 0) throw std::domain_error("heat_trace_eigensum requires tail_tol > 0");
    const int n = box.dim();
    // For lambda >= cutoff >= 2n/t the summand lambda^{n/2} e^{-lambda t}
    // decays at rate t/2, which certifies tail <= 2 N(cutoff) e^{-cutoff t}.
    double cutoff = std::max(2.0 * n / t, 1.0);
    auto tail_at = [&](double c) { return 2.0 * counting_upper_bound(box, c) * std::exp(-c * t); };
    int guard = 0;
    while (tail_at(cutoff) > tail_tol && guard++ < 10000) cutoff *= 1.5;

    EigensumResult out;
    out.cutoff_lambda = cutoff;
    out.tail_bound = tail_at(cutoff);
    double sum = 0;
    for (const auto& line : box_eigenvalues(box, bc, cutoff))
        sum += static_cast<double>(line.multiplicity) * std::exp(-line.value * t);
    out.value = sum;
    return out;
}

double HeatExpansion::evaluate(double t) const {
    if (t <= 0) throw std::domain_error("expansion evaluation requires t > 0");
    return area / (4.0 * kPi * t) - perimeter / (8.0 * std::sqrt(kPi * t)) + corner_constant;
}

HeatExpansion polygon_heat_expansion(const polygeom::Polygon& p, const QuadratureConfig& cfg) {
    if (!polygeom::is_convex(p))
        throw std::domain_error("polygon_heat_expansion requires a convex polygon");
    HeatExpansion e;
    e.area = polygeom::area(p);
    e.perimeter = polygeom::perimeter(p);
    e.corner_constant = 0;
    for (double angle : polygeom::interior_angles(p)) {
        if (!(angle > kPi / 2 && angle < kPi))
            throw std::domain_error(
                "polygon_heat_expansion: interior angle outside the open interval (pi/2, pi)");
        e.corner_constant += corner_coefficient(angle, cfg);
    }
    return e;
}

}  // namespace spectra::heat
