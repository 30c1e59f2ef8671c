#include <catch2/catch_amalgamated.hpp>

#include "hilb/poly_text.hpp"

using namespace hilb;

namespace {
const std::vector<std::string> kXYZW = {"x", "y", "z", "w"};
const std::vector<std::string> kABCDE = {"a", "b", "c", "d", "e"};

Integer coeff_of(const std::vector<std::pair<Monomial, Integer>>& poly, const Monomial& mon) {
    for (const auto& [m, c] : poly)
        if (m == mon) return c;
    return 0;
}
}  // namespace

TEST_CASE("simple relation polynomials", "[parser]") {
    const auto p = parse_polynomial("x^3-4xy", kXYZW);
    REQUIRE(p.size() == 2);
    CHECK(coeff_of(p, Monomial::variable(1, 3)) == 1);
    CHECK(coeff_of(p, Monomial{std::vector<std::int64_t>{1, 1}}) == -4);
}

TEST_CASE("numeric powers and implicit products", "[parser]") {
    const auto p = parse_polynomial("a^9-10^7de", kABCDE);
    REQUIRE(p.size() == 2);
    CHECK(coeff_of(p, Monomial::variable(1, 9)) == 1);
    CHECK(coeff_of(p, Monomial{std::vector<std::int64_t>{0, 0, 0, 1, 1}}) == -10000000);

    const auto q = parse_polynomial("17x^6 - 135x^4y + 5760 x^2w", kXYZW);
    CHECK(coeff_of(q, Monomial::variable(1, 6)) == 17);
    CHECK(coeff_of(q, Monomial{std::vector<std::int64_t>{4, 1}}) == -135);
    CHECK(coeff_of(q, Monomial{std::vector<std::int64_t>{2, 0, 0, 1}}) == 5760);

    const auto r = parse_polynomial("2*3x", kXYZW);
    CHECK(coeff_of(r, Monomial::variable(1)) == 6);
}

TEST_CASE("terms merge and cancel", "[parser]") {
    CHECK(parse_polynomial("x-x", kXYZW).empty());
    const auto p = parse_polynomial("x+x", kXYZW);
    REQUIRE(p.size() == 1);
    CHECK(p[0].second == 2);
    const auto q = parse_polynomial("-x--x+-x", kXYZW);
    REQUIRE(q.size() == 1);
    CHECK(q[0].second == -1);
}

TEST_CASE("constants and malformed input", "[parser]") {
    const auto c = parse_polynomial("7", kXYZW);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first.is_one());
    CHECK(c[0].second == 7);

    CHECK_THROWS_AS(parse_polynomial("x+q", kXYZW), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("", kXYZW), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x+", kXYZW), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x^", kXYZW), std::invalid_argument);
}
