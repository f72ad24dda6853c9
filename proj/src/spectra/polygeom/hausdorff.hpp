#pragma once

#include "spectra/polygeom/polygon.hpp"

namespace spectra::polygeom {

struct PointCloud {
    std::vector<Point> points;
};

/// Two-sided max-min Hausdorff distance between finite clouds, by the exact
/// quadratic scan. The scan is row partitioned; max combination is order
/// independent, so the result does not depend on the partitioning.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);
double hausdorff_distance_serial(const PointCloud& a, const PointCloud& b);

PointCloud sample_circle(double radius, int count);
/// Evenly spaced samples along each edge (vertices included once).
PointCloud sample_polygon_boundary(const Polygon& p, int per_edge);

}  // namespace spectra::polygeom
