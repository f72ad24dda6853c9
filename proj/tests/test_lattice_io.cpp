#include "spectra/lattices/lattice_io.hpp"

#include <doctest.h>

using namespace spectra;
using namespace spectra::lattices;

TEST_CASE("lattice json round trip") {
    std::string text = R"({"n": 2, "basis": [["1", "0"], ["1/2", "3"]]})";
    auto b = read_lattice_json(text);
    CHECK(b.columns(0, 1) == Rational(1, 2));
    CHECK(b.columns(1, 1) == 3);
    auto again = read_lattice_json(write_lattice_json(b));
    CHECK(again.columns == b.columns);
}

TEST_CASE("bare integers are accepted as entries") {
    auto b = read_lattice_json(R"({"n": 2, "basis": [[2, 0], [0, 2]]})");
    CHECK(b.columns(0, 0) == 2);
}

TEST_CASE("malformed lattice files name the offending field") {
    CHECK_THROWS_WITH_AS(read_lattice_json(R"({"basis": []})"), doctest::Contains("\"n\""),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(read_lattice_json(R"({"n": 2, "basis": [["1","0"]]})"),
                         doctest::Contains("\"basis\""), std::runtime_error);
    CHECK_THROWS_WITH_AS(read_lattice_json(R"({"n": 1, "basis": [["x"]]})"),
                         doctest::Contains("basis[0][0]"), std::runtime_error);
    CHECK_THROWS_AS(read_lattice_json("not json"), std::runtime_error);
    // rank error surfaces as a domain error from basis validation
    CHECK_THROWS_AS(read_lattice_json(R"({"n": 2, "basis": [["1","2"],["2","4"]]})"),
                    std::domain_error);
}

TEST_CASE("certificate report serializes every field") {
    auto report = certificate_isospectral(gram_of_basis(e16_basis()), gram_of_basis(e8xe8_basis()));
    auto text = certificate_report_json(report);
    for (const char* key : {"det_p", "det_q", "level_p", "level_q", "mu0", "t_bound",
                            "checked_ts", "verdict", "first_discrepancy"}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
    CHECK(text.find("isospectral") != std::string::npos);
}
