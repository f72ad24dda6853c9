#pragma once

namespace spectra::polygeom {

/// Vertex, edge, and face counts of a planar cell complex.
struct CellComplex {
    long long v = 0;
    long long e = 0;
    long long f = 0;
};

/// chi = V - E + F. Negative counts are rejected.
long long euler_characteristic(const CellComplex& c);

/// Hole count r = 1 - chi of a planar domain with Euler characteristic chi.
long long holes_from_chi(long long chi);

}  // namespace spectra::polygeom
