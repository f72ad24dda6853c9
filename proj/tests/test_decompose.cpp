#include "spectra/lattices/decompose.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

TEST_CASE("E8 x E8 splits into two summands, E16 does not split") {
    auto two = orthogonal_decompose(gram_of_basis(e8xe8_basis()));
    CHECK(two.count() == 2);
    CHECK(two.summands[0].basis_coords.size() == 8);
    CHECK(two.summands[1].basis_coords.size() == 8);

    auto one = orthogonal_decompose(gram_of_basis(e16_basis()));
    CHECK(one.count() == 1);
    CHECK(one.summands[0].basis_coords.size() == 16);
}

TEST_CASE("Z^3 splits into three summands") {
    auto d = orthogonal_decompose(GramMatrix::from_matrix(RatMat::identity(3)));
    CHECK(d.count() == 3);
}

TEST_CASE("block joins of irreducible blocks split back into the blocks") {
    std::mt19937 rng(5);
    int done = 0;
    while (done < 5) {
        auto b1 = oracles::random_even_pd_form(rng, 2);
        auto b2 = oracles::random_even_pd_form(rng, 2);
        if (orthogonal_decompose(b1).count() != 1) continue;
        if (orthogonal_decompose(b2).count() != 1) continue;
        RatMat join(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                join(i, j) = b1.entries(i, j);
                join(2 + i, 2 + j) = b2.entries(i, j);
            }
        auto d = orthogonal_decompose(GramMatrix::from_matrix(join));
        REQUIRE(d.count() == 2);
        // summand grams are unimodularly equivalent to the blocks; compare
        // representation tables up to t = 10
        auto key = [](const GramMatrix& g) { return representation_table(g, 10).entries; };
        auto k1 = key(b1), k2 = key(b2);
        auto s1 = key(d.summands[0].gram), s2 = key(d.summands[1].gram);
        bool direct = (s1 == k1 && s2 == k2) || (s1 == k2 && s2 == k1);
        CHECK(direct);
        ++done;
    }
}

TEST_CASE("summand bases are mutually orthogonal in the original form") {
    auto g = gram_of_basis(e8xe8_basis());
    auto d = orthogonal_decompose(g);
    REQUIRE(d.count() == 2);
    for (const auto& a : d.summands[0].basis_coords)
        for (const auto& b : d.summands[1].basis_coords) {
            Rational ip = 0;
            for (int i = 0; i < g.n; ++i)
                for (int j = 0; j < g.n; ++j) ip += a[i] * g.entries(i, j) * b[j];
            CHECK(ip == 0);
        }
}
