#pragma once

#include "spectra/lattices/certificate.hpp"
#include "spectra/lattices/torus.hpp"

#include <string>

namespace spectra::lattices {

/// Lattice file format: {"n": int, "basis": [[entries...], ...]} where each
/// inner array is one basis column and entries are exact rational strings
/// ("p/q" or "p"); bare JSON integers are accepted too.
/// Throws std::runtime_error naming the offending field on malformed input.
LatticeBasis read_lattice_json(const std::string& text);
std::string write_lattice_json(const LatticeBasis& b);

std::string certificate_report_json(const CertificateReport& r);

}  // namespace spectra::lattices
