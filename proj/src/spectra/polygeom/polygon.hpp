#pragma once

#include <array>
#include <vector>

namespace spectra::polygeom {

using Point = std::array<double, 2>;

/// Simple planar polygon. Construction validates at least three vertices,
/// pairwise non-intersecting edges (O(n^2) segment tests, epsilon 1e-12 on
/// the float predicates), positive area, and normalizes the orientation to
/// counterclockwise.
class Polygon {
  public:
    static Polygon from_vertices(std::vector<Point> vertices);
    const std::vector<Point>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }

  private:
    explicit Polygon(std::vector<Point> v) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;
};

double area(const Polygon& p);
double perimeter(const Polygon& p);

/// Interior angle at each vertex, measured inside the polygon, in (0, 2pi).
/// Collinear vertex triples are degenerate and rejected.
std::vector<double> interior_angles(const Polygon& p);
double min_interior_angle(const Polygon& p);
bool is_convex(const Polygon& p);

/// Regular N-gon with vertices on the unit circle, first vertex at angle 0.
Polygon inscribed_regular_ngon(int n);

/// The 2^k-gon enclosed in the unit disk: 2^{k-1} vertices equally spaced on
/// the circle, one inward spike on each perpendicular bisector placed so
/// both incident edges have length exactly 1/k. Requires k >= 7 and a chord
/// shorter than 2/k.
Polygon staircase_polygon(int k);

/// Opening angle of the notch at each spike vertex of a staircase polygon
/// (2pi minus the reflex interior angle). Decreases toward zero as k grows.
std::vector<double> staircase_spike_angles(const Polygon& p);

}  // namespace spectra::polygeom
