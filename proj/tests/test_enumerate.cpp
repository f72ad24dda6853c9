#include "spectra/lattices/enumerate.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

TEST_CASE("representation numbers on 2I_2") {
    RatMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 2;
    auto g = GramMatrix::from_matrix(m);
    CHECK(representation_number(g, 2) == 4);  // (+-1,0),(0,+-1)
    CHECK(representation_number(g, 0) == 1);
    CHECK(representation_number(g, 1) == 0);
}

TEST_CASE("even forms represent 1 zero times") {
    CHECK(representation_number(gram_of_basis(e16_basis()), 1) == 0);
    CHECK(representation_number(gram_of_basis(e8xe8_basis()), 1) == 0);
}

TEST_CASE("enumerator matches the naive box count on random even forms") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 3;
        auto g = oracles::random_even_pd_form(rng, n);
        auto table = representation_table(g, 20);
        for (Int t = 0; t <= 20; ++t) {
            CAPTURE(trial);
            CHECK(table.at(t) == oracles::naive_representation_count(g, t));
        }
    }
}

TEST_CASE("partitioned and serial tables agree") {
    auto g = gram_of_basis(e8_basis());
    auto a = representation_table(g, 8);
    auto b = representation_table_serial(g, 8);
    CHECK(a.counts_equal(b));
}

TEST_CASE("E8 theta coefficients") {
    auto table = representation_table(gram_of_basis(e8_basis()), 10);
    CHECK(table.at(0) == 1);
    CHECK(table.at(2) == 240);
    CHECK(table.at(4) == 2160);
    CHECK(table.at(6) == 6720);
    CHECK(table.at(8) == 17520);
    CHECK(table.at(10) == 30240);
    for (Int t = 1; t <= 9; t += 2) CHECK(table.at(t) == 0);
}

TEST_CASE("congruent bases give identical representation tables") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + trial % 3;
        RatMat b(n, n);
        std::uniform_int_distribution<int> e(-2, 2);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(i, j) = e(rng);
        } while (b.determinant() == 0);
        auto basis = LatticeBasis::from_matrix(b);
        auto rotated = LatticeBasis::from_matrix(oracles::random_signed_permutation(rng, n) * b);
        auto g1 = gram_of_basis(basis);
        auto g2 = gram_of_basis(rotated);
        CHECK(representation_table(g1, 12).entries == representation_table(g2, 12).entries);
    }
}

TEST_CASE("value lines on a rational form") {
    // dual gram of 2Z x 2Z is diag(1/4, 1/4)
    RatMat m(2, 2);
    m(0, 0) = Rational(1, 4);
    m(1, 1) = Rational(1, 4);
    auto lines = value_lines(m, 1);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == std::pair{Rational(0), Int(1)});
    CHECK(lines[1] == std::pair{Rational(1, 4), Int(4)});
    CHECK(lines[2] == std::pair{Rational(1, 2), Int(4)});
    CHECK(lines[3] == std::pair{Rational(1), Int(4)});
    CHECK(value_lines_serial(m, 1) == lines);
}

TEST_CASE("short vectors of the square lattice") {
    auto g = GramMatrix::from_matrix(RatMat::identity(2));
    auto vecs = short_vectors(g, 2);
    // one representative per +- pair: (1,0),(0,1),(1,1),(1,-1)
    CHECK(vecs.size() == 4);
    for (const auto& [norm, v] : vecs) CHECK((norm == 1 || norm == 2));
}
