#pragma once

#include "spectra/core/ratmat.hpp"

#include <string>
#include <vector>

namespace spectra::heat {

enum class BoundaryCondition { kDirichlet, kNeumann };

/// Rectangular box (0, l_1) x ... x (0, l_n). Exact rational sides enable
/// exact eigenvalue tie grouping; otherwise grouping falls back to a 1e-12
/// relative tolerance and multiplicities are numerical.
struct BoxSpec {
    std::vector<double> sides;
    std::vector<Rational> sides_exact;  // empty when only floating sides are known

    static BoxSpec from_rational(std::vector<Rational> sides);
    static BoxSpec from_doubles(std::vector<double> sides);
    int dim() const { return static_cast<int>(sides.size()); }
    double volume() const;
    bool has_exact_sides() const { return !sides_exact.empty(); }
};

/// lambda(m) = pi^2 sum_i (m_i / l_i)^2, the shared inclusion predicate for
/// eigenvalue enumeration and counting.
double tuple_lambda(const BoxSpec& box, const std::vector<long long>& m);

struct EigenLine {
    double value = 0;
    long long multiplicity = 0;
    std::vector<std::vector<long long>> index_witnesses;
};

/// All box eigenvalues <= lambda_max with multiplicity and index witnesses,
/// sorted increasingly. m_i >= 1 for Dirichlet, m_i >= 0 for Neumann.
std::vector<EigenLine> box_eigenvalues(const BoxSpec& box, BoundaryCondition bc,
                                       double lambda_max);

/// N(lambda): eigenvalue counting with multiplicity by direct lattice-point
/// enumeration over stripes of the quarter ellipsoid.
long long counting_function(const BoxSpec& box, BoundaryCondition bc, double lambda);
long long counting_function_serial(const BoxSpec& box, BoundaryCondition bc, double lambda);

/// omega_n * volume / (2 pi)^n with omega_n the unit-ball volume.
double weyl_constant(int n, double volume);

/// Exact squared-frequency keys sum_i m_i^2 / l_i^2 of the smallest k_max
/// eigenvalues (with multiplicity) of a rational box, sorted increasingly.
/// The eigenvalue is pi^2 times the key.
std::vector<Rational> box_eigen_keys(const std::vector<Rational>& sides, BoundaryCondition bc,
                                     int k_max);

/// Axis-aligned subbox of a partition, given by its lower corner and sides.
struct SubBox {
    std::vector<Rational> lo;
    std::vector<Rational> sides;
};

struct BracketingReport {
    int k_checked = 0;
    bool all_hold = false;
    std::vector<std::string> violations;
};

/// Checks the interlacing mu~_k <= lambda_k <= lambda~_k for k = 1..K, where
/// mu~ / lambda~ are the merged (sorted) Neumann / Dirichlet eigenvalues of
/// the partition pieces and lambda the box's own Dirichlet eigenvalues. All
/// comparisons are exact on rational squared-frequency keys. Requires exact
/// sides and a partition that exactly tiles the box.
BracketingReport bracketing_check(const BoxSpec& box, const std::vector<SubBox>& partition,
                                  int k_max);

}  // namespace spectra::heat
