#include "spectra/lattices/lattice.hpp"

#include <stdexcept>
#include <string>

namespace spectra::lattices {

LatticeBasis from_matrix_checked(RatMat m) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw std::domain_error("lattice basis must be a nonempty square matrix");
    if (m.determinant() == 0) throw std::domain_error("lattice basis is singular (rank deficient)");
    return LatticeBasis{m.rows(), std::move(m)};
}

LatticeBasis LatticeBasis::from_matrix(RatMat m) { return from_matrix_checked(std::move(m)); }

GramMatrix GramMatrix::from_matrix(RatMat m) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw std::domain_error("Gram matrix must be a nonempty square matrix");
    if (!m.is_symmetric()) throw std::domain_error("Gram matrix must be symmetric");
    auto minors = m.leading_minors();
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minors[k] <= 0)
            throw std::domain_error("Gram matrix not positive definite: leading minor " +
                                    std::to_string(k + 1) + " is " + to_string(minors[k]));
    return GramMatrix{m.rows(), std::move(m)};
}

GramMatrix gram_of_basis(const LatticeBasis& b) {
    return GramMatrix::from_matrix(b.columns.transposed() * b.columns);
}

LatticeBasis dual_basis(const LatticeBasis& b) {
    return LatticeBasis::from_matrix(b.columns.inverse().transposed());
}

bool is_even(const GramMatrix& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (!is_integer(g.entries(i, j))) return false;
    for (int i = 0; i < g.n; ++i)
        if (num(g.entries(i, i)) % 2 != 0) return false;
    return true;
}

Int level(const GramMatrix& g) {
    if (!is_even(g)) throw std::domain_error("level requires an integer even Gram matrix");
    RatMat inv = g.entries.inverse();
    Int n0 = 1;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) n0 = lcm(n0, den(inv(i, j)));
    // n0 * inv is integer; grow by integer multiples until the diagonal is even.
    for (Int k = 1;; ++k) {
        Int cand = n0 * k;
        bool even_diag = true;
        for (int i = 0; i < g.n && even_diag; ++i)
            even_diag = num(inv(i, i) * cand) % 2 == 0;
        if (even_diag) return cand;
    }
}

Rational mu0(const Int& n) {
    if (n < 1) throw std::domain_error("mu0 requires N >= 1");
    Rational out(n);
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        out *= Rational(p + 1, p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) out *= Rational(rest + 1, rest);
    return out;
}

LatticeBasis milnor_basis(int m) {
    if (m < 1) throw std::domain_error("milnor_basis requires m >= 1");
    const int n = 4 * m;
    RatMat a(n, n);
    a(0, 0) = 2;
    for (int i = 1; i < n - 1; ++i) a(i, i) = 1;
    for (int i = 0; i < n - 2; ++i) a(i, i + 1) = -1;
    for (int i = 0; i < n; ++i) a(i, n - 1) = Rational(1, 2);
    // Membership test for E_n: all coordinates integer or all in 1/2 + Z,
    // and the coordinate sum is even.
    for (int j = 0; j < n; ++j) {
        bool all_int = true, all_half = true;
        Rational sum = 0;
        for (int i = 0; i < n; ++i) {
            const Rational& x = a(i, j);
            if (!is_integer(x)) all_int = false;
            if (den(x) != 2) all_half = false;
            sum += x;
        }
        if (!((all_int || all_half) && is_integer(sum) && num(sum) % 2 == 0))
            throw std::logic_error("milnor_basis column " + std::to_string(j + 1) +
                                   " fails E_n membership");
    }
    return LatticeBasis::from_matrix(std::move(a));
}

LatticeBasis e8_basis() { return milnor_basis(2); }
LatticeBasis e16_basis() { return milnor_basis(4); }

LatticeBasis e8xe8_basis() {
    LatticeBasis a8 = e8_basis();
    RatMat b(16, 16);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            b(i, j) = a8.columns(i, j);
            b(8 + i, 8 + j) = a8.columns(i, j);
        }
    return LatticeBasis::from_matrix(std::move(b));
}

}  // namespace spectra::lattices
