#pragma once

#include "spectra/polygeom/euler.hpp"
#include "spectra/polygeom/polygon.hpp"

#include <string>

namespace spectra::polygeom {

/// Polygon file: JSON array of [x, y] number pairs, an ordered vertex list.
/// Orientation is normalized on load. Throws std::runtime_error naming the
/// offending element on malformed input.
Polygon read_polygon_json(const std::string& text);
std::string write_polygon_json(const Polygon& p);

/// Cell complex file: JSON object {"V": int, "E": int, "F": int}.
CellComplex read_cell_complex_json(const std::string& text);
std::string write_cell_complex_json(const CellComplex& c);

}  // namespace spectra::polygeom
