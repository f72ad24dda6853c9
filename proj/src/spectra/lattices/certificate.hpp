#pragma once

#include "spectra/lattices/enumerate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spectra::lattices {

enum class Verdict { kIsospectral, kNotIsospectral };

/// Everything the finite isospectrality check looked at, plus the first
/// discrepancy when the verdict is negative.
struct CertificateReport {
    Rational det_p, det_q;
    Int level_p, level_q;
    Rational mu0_value;
    Rational t_bound;             // mu0(N_P) * k / 12 + 1
    std::vector<Int> checked_ts;  // every integer in [0, t_bound]
    Verdict verdict = Verdict::kNotIsospectral;
    /// "determinant", "level", or "R(t)" for the first differing t.
    std::optional<std::string> first_discrepancy;
};

/// Decides isospectrality of two even positive definite forms in the same
/// even dimension 2k: determinants, levels, then representation numbers for
/// every integer t in [0, mu0(N_P) k / 12 + 1].
CertificateReport certificate_isospectral(const GramMatrix& p, const GramMatrix& q);

std::string to_string(Verdict v);

}  // namespace spectra::lattices
