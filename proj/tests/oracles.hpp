#pragma once

// Test-side oracles, kept independent of the implementation paths they check.

#include "spectra/lattices/lattice.hpp"

#include <random>
#include <vector>

namespace oracles {

using spectra::Int;
using spectra::RatMat;
using spectra::Rational;
using spectra::lattices::GramMatrix;

/// Brute-force count of {x in Z^n : x^T G x = t} over the integer box
/// |x_i| <= sqrt(t * (G^{-1})_ii). No pruning, exact arithmetic throughout.
inline Int naive_representation_count(const GramMatrix& g, const Int& t) {
    const int n = g.n;
    RatMat inv = g.entries.inverse();
    std::vector<long long> lim(n);
    for (int i = 0; i < n; ++i)
        lim[i] = static_cast<long long>(spectra::isqrt(spectra::floor_rat(Rational(t) * inv(i, i))));
    std::vector<long long> x(n, 0);
    Int count = 0;
    auto eval = [&]() {
        Int q = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (x[j] != 0) q += spectra::num(g.entries(i, j)) * x[i] * x[j];
        }
        return q;
    };
    std::vector<int> idx(n, 0);
    // odometer over the box
    for (int i = 0; i < n; ++i) x[i] = -lim[i];
    for (;;) {
        if (eval() == t) ++count;
        int i = 0;
        while (i < n && x[i] == lim[i]) {
            x[i] = -lim[i];
            ++i;
        }
        if (i == n) break;
        ++x[i];
    }
    return count;
}

/// Random symmetric integer matrix with even diagonal, rejection-sampled
/// until positive definite. Entries bounded by 6 in magnitude.
inline GramMatrix random_even_pd_form(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> off(-3, 3);
    std::uniform_int_distribution<int> diag(1, 3);
    for (;;) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = 2 * diag(rng) + 2;  // 4, 6, or 8 keeps PD rejection reasonable
            for (int j = i + 1; j < n; ++j) {
                int v = off(rng);
                m(i, j) = v;
                m(j, i) = v;
            }
        }
        auto minors = m.leading_minors();
        bool pd = true;
        for (const auto& mi : minors) pd = pd && mi > 0;
        if (pd) return GramMatrix::from_matrix(std::move(m));
    }
}

/// Random unimodular matrix with entries in {-1, 0, 1}, det +-1, by rejection.
inline RatMat random_unimodular(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> e(-1, 1);
    for (;;) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = e(rng);
        Rational d = m.determinant();
        if (d == 1 || d == -1) return m;
    }
}

/// Random signed permutation matrix (an exact orthogonal matrix).
inline RatMat random_signed_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> sign(0, 1);
    RatMat m(n, n);
    for (int j = 0; j < n; ++j) m(perm[j], j) = sign(rng) ? 1 : -1;
    return m;
}

}  // namespace oracles
