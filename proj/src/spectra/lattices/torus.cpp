#include "spectra/lattices/torus.hpp"

#include <stdexcept>

namespace spectra::lattices {

TorusSpectrum torus_spectrum(const LatticeBasis& b, const Rational& cutoff_norm_sq) {
    if (cutoff_norm_sq < 0) throw std::domain_error("spectrum cutoff must be >= 0");
    // Dual vectors are D x for integer x, so their squared norms are the
    // values of the dual Gram (B^T B)^{-1}.
    RatMat dual_gram = gram_of_basis(b).entries.inverse();
    TorusSpectrum spec;
    spec.cutoff = cutoff_norm_sq;
    spec.lines = value_lines(dual_gram, cutoff_norm_sq);
    return spec;
}

}  // namespace spectra::lattices
