#include "spectra/lattices/lattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

namespace {

RatMat diag2(int a, int b) {
    RatMat m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("gram of identity basis is the identity") {
    auto b = LatticeBasis::from_matrix(RatMat::identity(2));
    CHECK(gram_of_basis(b).entries == RatMat::identity(2));
}

TEST_CASE("gram of diag(2,3) is diag(4,9)") {
    auto b = LatticeBasis::from_matrix(diag2(2, 3));
    CHECK(gram_of_basis(b).entries == diag2(4, 9));
}

TEST_CASE("gram of the Milnor A_16 basis is even with determinant 1") {
    auto g = gram_of_basis(e16_basis());
    CHECK(g.entries.determinant() == 1);
    CHECK(is_even(g));
}

TEST_CASE("singular basis is rejected") {
    RatMat m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    CHECK_THROWS_AS(LatticeBasis::from_matrix(m), std::domain_error);
}

TEST_CASE("non positive definite gram reports the failing minor") {
    RatMat m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 3;
    m(1, 0) = 3;
    m(1, 1) = 1;
    CHECK_THROWS_WITH_AS(GramMatrix::from_matrix(m),
                         doctest::Contains("leading minor 2"), std::domain_error);
}

TEST_CASE("dual of the integer lattice is itself") {
    auto b = LatticeBasis::from_matrix(RatMat::identity(3));
    CHECK(dual_basis(b).columns == RatMat::identity(3));
}

TEST_CASE("dual of the 1-d lattice 2Z is Z/2") {
    RatMat m(1, 1);
    m(0, 0) = 2;
    auto d = dual_basis(LatticeBasis::from_matrix(m));
    CHECK(d.columns(0, 0) == Rational(1, 2));
}

TEST_CASE("dual is an involution on the Gram form") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 3;
        RatMat m(n, n);
        std::uniform_int_distribution<int> e(-3, 3);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = Rational(e(rng), 1 + (trial % 2));
        } while (m.determinant() == 0);
        auto b = LatticeBasis::from_matrix(m);
        CHECK(gram_of_basis(dual_basis(dual_basis(b))).entries == gram_of_basis(b).entries);
    }
}

TEST_CASE("is_even distinguishes even and odd forms") {
    CHECK(is_even(gram_of_basis(e16_basis())));
    CHECK_FALSE(is_even(GramMatrix::from_matrix(RatMat::identity(2))));
    CHECK(is_even(GramMatrix::from_matrix(diag2(2, 2))));
}

TEST_CASE("level of the Milnor grams is 1") {
    CHECK(level(gram_of_basis(e16_basis())) == 1);
    CHECK(level(gram_of_basis(e8xe8_basis())) == 1);
}

TEST_CASE("level examples against a brute-force scan") {
    auto brute_level = [](const GramMatrix& g) {
        RatMat inv = g.entries.inverse();
        for (Int n = 1; n <= 64; ++n) {
            bool ok = true;
            for (int i = 0; i < g.n && ok; ++i)
                for (int j = 0; j < g.n && ok; ++j) {
                    Rational v = inv(i, j) * n;
                    ok = is_integer(v) && (i != j || num(v) % 2 == 0);
                }
            if (ok) return n;
        }
        return Int(-1);
    };
    auto g1 = GramMatrix::from_matrix(diag2(2, 2));
    CHECK(level(g1) == 4);
    CHECK(level(g1) == brute_level(g1));
    RatMat a2(2, 2);
    a2(0, 0) = 2;
    a2(0, 1) = 1;
    a2(1, 0) = 1;
    a2(1, 1) = 2;
    auto g2 = GramMatrix::from_matrix(a2);
    CHECK(level(g2) == 3);
    CHECK(level(g2) == brute_level(g2));
}

TEST_CASE("level is invariant under unimodular congruence") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + trial % 3;
        auto g = oracles::random_even_pd_form(rng, n);
        auto u = oracles::random_unimodular(rng, n);
        auto conj = GramMatrix::from_matrix(u.transposed() * g.entries * u);
        REQUIRE(is_even(conj));
        CHECK(level(g) == level(conj));
    }
}

TEST_CASE("mu0 values") {
    CHECK(mu0(1) == 1);
    CHECK(mu0(2) == 3);
    CHECK(mu0(12) == 24);
    CHECK_THROWS_AS(mu0(0), std::domain_error);
}

TEST_CASE("milnor basis entries follow the displayed matrix") {
    auto a8 = milnor_basis(2);
    CHECK(a8.columns(0, 0) == 2);
    for (int i = 0; i < 8; ++i) CHECK(a8.columns(i, 7) == Rational(1, 2));
    for (int i = 0; i < 6; ++i) CHECK(a8.columns(i, i + 1) == -1);
    CHECK_THROWS_AS(milnor_basis(0), std::domain_error);
    // milnor_basis validates E_{4m} membership of every column internally
    CHECK(milnor_basis(4).n == 16);
}

TEST_CASE("e8xe8 basis is block diagonal with A_8 blocks") {
    auto b = e8xe8_basis();
    auto a8 = e8_basis();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CHECK(b.columns(i, j) == a8.columns(i, j));
            CHECK(b.columns(8 + i, 8 + j) == a8.columns(i, j));
            CHECK(b.columns(i, 8 + j) == 0);
            CHECK(b.columns(8 + i, j) == 0);
        }
}
