#include "spectra/polygeom/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spectra::polygeom {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 1e-12;

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double signed_area(const std::vector<Point>& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto orient = [](const Point& p, const Point& q, const Point& r) {
        double v = cross(p, q, r);
        double scale = std::max({1.0, std::abs(q[0] - p[0]), std::abs(q[1] - p[1]),
                                 std::abs(r[0] - p[0]), std::abs(r[1] - p[1])});
        if (std::abs(v) <= kEps * scale * scale) return 0;
        return v > 0 ? 1 : -1;
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    auto on_segment = [](const Point& p, const Point& q, const Point& r) {
        return std::min(p[0], q[0]) - kEps <= r[0] && r[0] <= std::max(p[0], q[0]) + kEps &&
               std::min(p[1], q[1]) - kEps <= r[1] && r[1] <= std::max(p[1], q[1]) + kEps;
    };
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

Polygon Polygon::from_vertices(std::vector<Point> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw std::domain_error("polygon needs at least 3 vertices");
    for (int i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        if (std::hypot(b[0] - a[0], b[1] - a[1]) <= kEps)
            throw std::domain_error("polygon has a degenerate (zero length) edge");
    }
    // simplicity: no two non-adjacent edges intersect
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(vertices[i], vertices[(i + 1) % n], vertices[j],
                                   vertices[(j + 1) % n]))
                throw std::domain_error("polygon is not simple: edges " + std::to_string(i) +
                                        " and " + std::to_string(j) + " intersect");
        }
    double sa = signed_area(vertices);
    if (std::abs(sa) <= kEps) throw std::domain_error("polygon has vanishing area");
    if (sa < 0) std::reverse(vertices.begin(), vertices.end());
    return Polygon(std::move(vertices));
}

double area(const Polygon& p) { return signed_area(p.vertices()); }

double perimeter(const Polygon& p) {
    const auto& v = p.vertices();
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += std::hypot(b[0] - a[0], b[1] - a[1]);
    }
    return s;
}

std::vector<double> interior_angles(const Polygon& p) {
    const auto& v = p.vertices();
    const int n = static_cast<int>(v.size());
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const Point& prev = v[(i + n - 1) % n];
        const Point& cur = v[i];
        const Point& next = v[(i + 1) % n];
        double d1x = cur[0] - prev[0], d1y = cur[1] - prev[1];
        double d2x = next[0] - cur[0], d2y = next[1] - cur[1];
        double cr = d1x * d2y - d1y * d2x;
        double dt = d1x * d2x + d1y * d2y;
        double scale = std::hypot(d1x, d1y) * std::hypot(d2x, d2y);
        if (std::abs(cr) <= kEps * scale && dt > 0)
            throw std::domain_error("degenerate polygon: collinear triple at vertex " +
                                    std::to_string(i));
        double turn = std::atan2(cr, dt);  // in (-pi, pi]
        out[i] = kPi - turn;               // CCW orientation: left turns are convex
    }
    return out;
}

double min_interior_angle(const Polygon& p) {
    auto angles = interior_angles(p);
    return *std::min_element(angles.begin(), angles.end());
}

bool is_convex(const Polygon& p) {
    for (double a : interior_angles(p))
        if (a >= kPi) return false;
    return true;
}

Polygon inscribed_regular_ngon(int n) {
    if (n < 3) throw std::domain_error("regular polygon needs N >= 3");
    std::vector<Point> v(n);
    for (int i = 0; i < n; ++i) {
        double phi = 2.0 * kPi * i / n;
        v[i] = {std::cos(phi), std::sin(phi)};
    }
    return Polygon::from_vertices(std::move(v));
}

Polygon staircase_polygon(int k) {
    if (k < 7) throw std::domain_error("staircase polygon requires k >= 7");
    const long long half = 1LL << (k - 1);
    const double step = 2.0 * kPi / static_cast<double>(half);
    const double chord = 2.0 * std::sin(kPi / static_cast<double>(half));
    const double edge = 1.0 / k;
    if (chord >= 2.0 * edge)
        throw std::domain_error("staircase polygon infeasible: chord between circle vertices is "
                                "at least 2/k");
    // spike on the inward perpendicular bisector, both incident edges 1/k
    const double depth = std::sqrt(edge * edge - 0.25 * chord * chord);
    const double mid_radius = std::cos(kPi / static_cast<double>(half));
    const double spike_radius = mid_radius - depth;

    std::vector<Point> v;
    v.reserve(2 * half);
    for (long long i = 0; i < half; ++i) {
        double phi = step * static_cast<double>(i);
        v.push_back({std::cos(phi), std::sin(phi)});
        double mid = phi + 0.5 * step;
        v.push_back({spike_radius * std::cos(mid), spike_radius * std::sin(mid)});
    }
    for (const Point& pt : v)
        if (std::hypot(pt[0], pt[1]) > 1.0 + 1e-12)
            throw std::logic_error("staircase vertex left the closed unit disk");
    return Polygon::from_vertices(std::move(v));
}

std::vector<double> staircase_spike_angles(const Polygon& p) {
    auto angles = interior_angles(p);
    std::vector<double> out;
    // spikes are the reflex vertices; report the notch opening 2pi - angle
    for (double a : angles)
        if (a > kPi) out.push_back(2.0 * kPi - a);
    return out;
}

}  // namespace spectra::polygeom
