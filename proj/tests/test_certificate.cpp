#include "spectra/lattices/certificate.hpp"
#include "spectra/lattices/decompose.hpp"
#include "spectra/lattices/torus.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

TEST_CASE("Milnor pair certifies isospectral") {
    auto p = gram_of_basis(e16_basis());
    auto q = gram_of_basis(e8xe8_basis());
    auto report = certificate_isospectral(p, q);
    CHECK(report.verdict == Verdict::kIsospectral);
    CHECK(report.det_p == 1);
    CHECK(report.det_q == 1);
    CHECK(report.level_p == 1);
    CHECK(report.level_q == 1);
    CHECK(report.mu0_value == 1);
    CHECK(report.t_bound == Rational(5, 3));
    REQUIRE(report.checked_ts.size() == 2);  // t in {0, 1}
    CHECK(report.checked_ts[0] == 0);
    CHECK(report.checked_ts[1] == 1);
    CHECK_FALSE(report.first_discrepancy.has_value());
}

TEST_CASE("certificate is reflexive") {
    auto g = gram_of_basis(e8_basis());
    CHECK(certificate_isospectral(g, g).verdict == Verdict::kIsospectral);
}

TEST_CASE("determinant mismatch is the first discrepancy") {
    RatMat a(2, 2), b(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 2;
    b(0, 0) = 2;
    b(1, 1) = 4;
    auto report = certificate_isospectral(GramMatrix::from_matrix(a), GramMatrix::from_matrix(b));
    CHECK(report.verdict == Verdict::kNotIsospectral);
    CHECK(report.first_discrepancy == "determinant");
}

TEST_CASE("certificate rejects bad inputs") {
    auto even2 = GramMatrix::from_matrix([] {
        RatMat m(2, 2);
        m(0, 0) = 2;
        m(1, 1) = 2;
        return m;
    }());
    auto even4 = gram_of_basis(LatticeBasis::from_matrix(RatMat::identity(4)));
    // dimension mismatch
    CHECK_THROWS_AS(certificate_isospectral(even2, gram_of_basis(e8_basis())), std::domain_error);
    // odd forms
    CHECK_THROWS_AS(certificate_isospectral(even4, even4), std::domain_error);
    // odd dimension
    RatMat odd(3, 3);
    odd(0, 0) = 2;
    odd(1, 1) = 2;
    odd(2, 2) = 2;
    auto godd = GramMatrix::from_matrix(odd);
    CHECK_THROWS_AS(certificate_isospectral(godd, godd), std::domain_error);
}

TEST_CASE("certificate verdict matches extended representation tables") {
    // On small even pairs the certificate must agree with direct table
    // equality up to 2x the certificate bound.
    std::mt19937 rng(11);
    int tested = 0;
    while (tested < 8) {
        auto p = oracles::random_even_pd_form(rng, 2);
        auto q = oracles::random_even_pd_form(rng, 2);
        auto report = certificate_isospectral(p, q);
        Int extended = 2 * floor_rat(report.t_bound);
        bool tables_equal =
            representation_table(p, extended).entries == representation_table(q, extended).entries;
        CHECK((report.verdict == Verdict::kIsospectral) == tables_equal);
        ++tested;
    }
}
