#include "spectra/lattices/torus.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

TEST_CASE("Z^2 torus spectrum lines") {
    auto b = LatticeBasis::from_matrix(RatMat::identity(2));
    auto s1 = torus_spectrum(b, 1);
    REQUIRE(s1.lines.size() == 2);
    CHECK(s1.lines[0] == std::pair{Rational(0), Int(1)});
    CHECK(s1.lines[1] == std::pair{Rational(1), Int(4)});

    auto s2 = torus_spectrum(b, 2);
    REQUIRE(s2.lines.size() == 3);
    CHECK(s2.lines[2] == std::pair{Rational(2), Int(4)});
}

TEST_CASE("first line of any spectrum is (0,1)") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 1 + trial % 3;
        RatMat m(n, n);
        std::uniform_int_distribution<int> e(-2, 2);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = Rational(e(rng), 1 + trial % 3);
        } while (m.determinant() == 0);
        auto s = torus_spectrum(LatticeBasis::from_matrix(m), Rational(3, 2));
        REQUIRE(!s.lines.empty());
        CHECK(s.lines[0] == std::pair{Rational(0), Int(1)});
    }
}

TEST_CASE("spectrum is invariant under unimodular basis change") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + trial % 3;
        RatMat m(n, n);
        std::uniform_int_distribution<int> e(-2, 2);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = e(rng);
        } while (m.determinant() == 0);
        auto u = oracles::random_unimodular(rng, n);
        auto s1 = torus_spectrum(LatticeBasis::from_matrix(m), 6);
        auto s2 = torus_spectrum(LatticeBasis::from_matrix(m * u), 6);
        CHECK(s1.lines == s2.lines);
    }
}

TEST_CASE("spectrum lines equal the dual Gram representation counts") {
    // Thm 2.8 against Cor 2.15: line (s, m) exists iff the dual form
    // represents s with multiplicity m.
    auto b = LatticeBasis::from_matrix([] {
        RatMat m(2, 2);
        m(0, 0) = 2;
        m(0, 1) = 1;
        m(1, 1) = 1;
        return m;
    }());
    auto spec = torus_spectrum(b, 5);
    RatMat dual_gram = gram_of_basis(b).entries.inverse();
    auto lines = value_lines(dual_gram, 5);
    CHECK(spec.lines == lines);
    // integer dual norm check against the integer-form enumerator
    auto bi = LatticeBasis::from_matrix(RatMat::identity(2));
    auto spec_i = torus_spectrum(bi, 4);
    auto table = representation_table(gram_of_basis(bi), 4);
    for (const auto& [value, mult] : spec_i.lines) {
        REQUIRE(is_integer(value));
        CHECK(table.at(num(value)) == mult);
    }
}

TEST_CASE("Milnor pair truncated spectra agree at cutoff 10") {
    auto s16 = torus_spectrum(e16_basis(), 10);
    auto s88 = torus_spectrum(e8xe8_basis(), 10);
    CHECK(s16.lines == s88.lines);
    REQUIRE(s16.lines.size() == 6);
    CHECK(s16.lines[1] == std::pair{Rational(2), Int(480)});
    CHECK(s16.lines[2] == std::pair{Rational(4), Int(61920)});
}
