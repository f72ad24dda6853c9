#pragma once

#include "spectra/lattices/lattice.hpp"

#include <map>
#include <utility>
#include <vector>

namespace spectra::lattices {

/// Exact counts R(q, t) = #{x in Z^n : q(x) = t} for an integer positive
/// definite form, for every integer t in [0, t_max]. Entries with no
/// representations are present with count 0.
struct RepresentationTable {
    GramMatrix form;
    Int t_max = 0;
    std::map<Int, Int> entries;

    Int at(const Int& t) const;
    bool counts_equal(const RepresentationTable& other) const;
};

/// Exact count of integer vectors with x^T G x = t. G integer positive
/// definite, t >= 0. Enumeration uses recursive coordinate bounds from an
/// exact rational LDL^T decomposition; no floating point decides a count.
Int representation_number(const GramMatrix& g, const Int& t);

RepresentationTable representation_table(const GramMatrix& g, const Int& t_max);
/// Reference implementation without the partitioned top-level loop.
RepresentationTable representation_table_serial(const GramMatrix& g, const Int& t_max);

/// Value lines (q(x), count) for a rational positive definite form, over all
/// integer x with q(x) <= cutoff, grouped by exact rational value and sorted
/// increasingly. The first line is always (0, 1).
std::vector<std::pair<Rational, Int>> value_lines(const RatMat& gram, const Rational& cutoff);
std::vector<std::pair<Rational, Int>> value_lines_serial(const RatMat& gram, const Rational& cutoff);

/// All nonzero integer vectors x with x^T G x <= bound, one representative
/// per +-pair (the sign with positive leading nonzero coordinate), paired
/// with the exact norm. G integer positive definite.
std::vector<std::pair<Int, std::vector<long long>>> short_vectors(const GramMatrix& g,
                                                                  const Int& bound);

}  // namespace spectra::lattices
