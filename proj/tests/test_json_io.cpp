#include <doctest.h>

#include "gpoly/errors.hpp"
#include "gpoly/json_io.hpp"
#include "oracles.hpp"

using namespace gpoly;

namespace {

void check_round_trip(const Json& j) {
    const std::string once = j.dump(2);
    CHECK(Json::parse(once).dump(2) == once);
}

}  // namespace

TEST_CASE("rationals as string pairs") {
    const Rational big = make_rational(Integer("123456789012345678901234567891"), 7);
    const Json j = rational_json(big);
    CHECK(j["num"] == "123456789012345678901234567891");
    CHECK(j["den"] == "7");
    CHECK(rational_from_json(j) == big);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), DomainError);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}}), DomainError);
}

TEST_CASE("polynomials") {
    const GPolyRecord rec = closed_form(7, 3);
    const Json j = to_json(rec);
    CHECK(j["coefficients"] == Json::array({"0", "10", "12", "3"}));
    CHECK(poly_from_json(j["coefficients"]) == rec.poly);
    oracle::Gen gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        const UniPoly p = gen.poly(6);
        CHECK(poly_from_json(coefficients_json(p)) == p);
    }
}

TEST_CASE("reports round-trip byte-identically") {
    check_round_trip(to_json(verify(registry()[0], 12)));
    check_round_trip(to_json(verify_sturm_family(Family::DiagHalf, 0, 12)));
    const auto inst = liu_wang_fixed_d(5, 2);
    check_round_trip(to_json(inst, liu_wang_check(inst)));
    check_round_trip(to_json(stats(3)));
    check_round_trip(to_json(stats(30)));
    check_round_trip(to_json(check_lemma45(5)));
    check_round_trip(to_json(conjecture_probe(Schedule::FloorSqrt, 0, 4, 12)));
    for (auto& r : real_roots(closed_form(9, 4).poly)) check_round_trip(to_json(r));
}

TEST_CASE("NaN distances serialize as null") {
    const Json j = to_json(stats(3));
    CHECK(j["clt_distance"].is_null());
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("csv layout") {
    const std::string csv = stats_csv({stats(4), stats(5)});
    CHECK(csv.rfind("n,d,mu_num,mu_den,sigma2_num,sigma2_den,r_num,r_den,clt_distance,llt_distance\n", 0) == 0);
    CHECK(csv.find("\n4,2,4,3,2,9,1,3,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
