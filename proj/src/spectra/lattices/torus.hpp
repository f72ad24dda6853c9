#pragma once

#include "spectra/lattices/enumerate.hpp"

namespace spectra::lattices {

/// Truncated Laplace spectrum of the flat torus R^n / Gamma. Lines carry the
/// exact squared dual norm; the eigenvalue is 4 pi^2 * norm_sq and is only
/// rendered in floating point at output boundaries.
struct TorusSpectrum {
    Rational cutoff;  // on ||gamma||^2 over the dual lattice
    std::vector<std::pair<Rational, Int>> lines;  // (norm_sq, multiplicity), strictly increasing

    bool operator==(const TorusSpectrum& o) const = default;
};

/// All dual lattice vectors with squared norm <= cutoff, grouped by exact
/// squared norm. The first line is always (0, 1).
TorusSpectrum torus_spectrum(const LatticeBasis& b, const Rational& cutoff_norm_sq);

}  // namespace spectra::lattices
