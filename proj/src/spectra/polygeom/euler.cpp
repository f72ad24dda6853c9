#include "spectra/polygeom/euler.hpp"

#include <stdexcept>

namespace spectra::polygeom {

long long euler_characteristic(const CellComplex& c) {
    if (c.v < 0 || c.e < 0 || c.f < 0)
        throw std::domain_error("cell complex counts must be nonnegative");
    return c.v - c.e + c.f;
}

long long holes_from_chi(long long chi) { return 1 - chi; }

}  // namespace spectra::polygeom
