#include "spectra/polygeom/hausdorff.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectra::polygeom {
namespace {

constexpr double kPi = 3.14159265358979323846;

double sq(double v) { return v * v; }

double directed_sq(const std::vector<Point>& from, const std::vector<Point>& to, bool parallel) {
    double worst = 0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (parallel)
    for (std::size_t i = 0; i < from.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& q : to) {
            double d = sq(from[i][0] - q[0]) + sq(from[i][1] - q[1]);
            best = std::min(best, d);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff_impl(const PointCloud& a, const PointCloud& b, bool parallel) {
    if (a.points.empty() || b.points.empty())
        throw std::domain_error("hausdorff_distance requires nonempty clouds");
    return std::sqrt(
        std::max(directed_sq(a.points, b.points, parallel), directed_sq(b.points, a.points, parallel)));
}

}  // namespace

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
    return hausdorff_impl(a, b, true);
}

double hausdorff_distance_serial(const PointCloud& a, const PointCloud& b) {
    return hausdorff_impl(a, b, false);
}

PointCloud sample_circle(double radius, int count) {
    if (count < 1 || radius <= 0) throw std::domain_error("sample_circle needs radius > 0, count >= 1");
    PointCloud c;
    c.points.reserve(count);
    for (int i = 0; i < count; ++i) {
        double phi = 2.0 * kPi * i / count;
        c.points.push_back({radius * std::cos(phi), radius * std::sin(phi)});
    }
    return c;
}

PointCloud sample_polygon_boundary(const Polygon& p, int per_edge) {
    if (per_edge < 1) throw std::domain_error("sample_polygon_boundary needs per_edge >= 1");
    const auto& v = p.vertices();
    PointCloud c;
    c.points.reserve(v.size() * static_cast<std::size_t>(per_edge));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        for (int s = 0; s < per_edge; ++s) {
            double t = static_cast<double>(s) / per_edge;
            c.points.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    return c;
}

}  // namespace spectra::polygeom
