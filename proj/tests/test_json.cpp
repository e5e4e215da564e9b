#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mlr/json_io.hpp"

using namespace mlr;

TEST_CASE("rational round trip") {
    const LaurentPoly q = LaurentPoly::q(), t = LaurentPoly::t(), one(1);
    QtRational f((one - q * q) * (one - q * t * t), (one - q * t) * (one - q * q * t));
    json j = to_json(f);
    CHECK(j["num"] == json::parse(R"([[0,0,"1"],[1,2,"-1"],[2,0,"-1"],[3,2,"1"]])"));
    CHECK(qt_rational_from_json(j) == f);
    CHECK(to_json(QtRational()) == json::parse(R"({"num":[],"den":[[0,0,"1"]]})"));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<LaurentPoly::Term> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back({{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2}, mpz_class(static_cast<long>(rng() % 7) - 3)});
            b.push_back({{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)}, mpz_class(static_cast<long>(rng() % 7) - 3)});
        }
        auto den = LaurentPoly::from_terms(b);
        if (den.is_zero()) continue;
        QtRational g(LaurentPoly::from_terms(a), den);
        CHECK(qt_rational_from_json(json::parse(to_json(g).dump())) == g);
    }
    CHECK_THROWS_AS(qt_rational_from_json(json::parse(R"({"num":[[0,0,1]],"den":[[0,0,"1"]]})")), ParseError);
    CHECK_THROWS_AS(qt_rational_from_json(json::parse(R"({"num":[]})")), ParseError);
    CHECK_THROWS_AS(qt_rational_from_json(json::parse(R"({"num":[],"den":[]})")), ZeroDenominator);
}

TEST_CASE("other payloads") {
    auto T = Tableau::from_rows({{1, 2, 3}, {3, 3}});
    CHECK(to_json(T) == json::parse(R"({"shape":[3,2],"rows":[[1,2,3],[3,3]]})"));
    auto d = p_in_e_basis({2}, 2);
    json e = to_json(d);
    REQUIRE(e.size() == 2);
    CHECK(e[0]["index"] == json::parse("[1,1]"));
    CHECK(e[1]["index"] == json::parse("[2]"));
    auto r = stanley_check({1}, {2}, {2, 1});
    json s = to_json(r);
    CHECK(s["laurent"] == true);
    CHECK(s["factored"] == true);
    CHECK(s["u_count"] == s["l_count"]);
    CHECK(s["monomial"].size() == 3);
}
