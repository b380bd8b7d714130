#include "doctest.h"

#include <algorithm>

#include "taxdist/continued_fraction.hpp"
#include "taxdist/error.hpp"

using namespace taxdist;

namespace {

// Plain Euclid on an exact rational, ignoring any uncertainty.
std::vector<BigInt> euclid_denominators(Rational x) {
    std::vector<BigInt> qs;
    BigInt q0 = 1, q1 = 0;
    while (true) {
        const BigInt a = numerator(x) / denominator(x);
        const BigInt q = a * q1 + q0;
        qs.push_back(q);
        q0 = q1;
        q1 = q;
        const Rational rest = x - Rational(a);
        if (rest == 0) {
            return qs;
        }
        x = 1 / rest;
    }
}

std::vector<BigInt> denominators(const ConvergentExpansion& e) {
    std::vector<BigInt> qs;
    for (const auto& c : e.convergents) {
        qs.push_back(c.q);
    }
    return qs;
}

} // namespace

TEST_SUITE("continued_fraction") {

TEST_CASE("delta digits") {
    CHECK(delta_constant(15).text == "0.570376001675023");
    CHECK(delta_constant(1).text == "0.6");
    const auto twenty = delta_constant(20).text;
    CHECK(twenty.size() == 22);
    CHECK(twenty.rfind("0.570376001675023", 0) == 0);
    CHECK(twenty == "0.57037600167502303696");
    CHECK(delta_constant(15).uncertainty == Rational(1, BigInt("1000000000000000")));
    CHECK_THROWS_AS(delta_constant(0), DomainError);
    CHECK_THROWS_AS(delta_constant(delta_max_digits + 1), DomainError);
}

TEST_CASE("decimal parsing") {
    const auto d = Decimal::parse("0.125");
    CHECK(d.value == Rational(1, 8));
    CHECK(d.uncertainty == 0);
    CHECK(Decimal::parse("-2.5").value == Rational(-5, 2));
    CHECK(Decimal::parse("3").value == 3);
    CHECK(Decimal::parse_rounded("0.57").uncertainty == Rational(1, 200));
    for (const char* bad : {"", ".", "1.2.3", "abc", "1e5", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Decimal::parse(bad), DomainError);
    }
    CHECK_THROWS_AS(Decimal::parse("0.5", Rational(-1)), DomainError);
}

TEST_CASE("exact one half") {
    const auto e = continued_fraction_convergents(Decimal::parse("0.5"), 1000);
    REQUIRE(e.convergents.size() == 2);
    CHECK(e.convergents[0].p == 0);
    CHECK(e.convergents[0].q == 1);
    CHECK(e.convergents[1].p == 1);
    CHECK(e.convergents[1].q == 2);
    CHECK_FALSE(e.truncated);
    CHECK_FALSE(e.next_denominator.has_value());
}

TEST_CASE("delta convergents") {
    const auto small = continued_fraction_convergents(delta_constant(20), 10000000);
    const auto qs = denominators(small);
    CHECK(std::find(qs.begin(), qs.end(), BigInt(5382609)) != qs.end());
    CHECK_FALSE(small.truncated);

    const auto large = continued_fraction_convergents(delta_constant(20), 200000000);
    CHECK_FALSE(large.truncated);
    CHECK(large.convergents.back().q == 169229911);
    REQUIRE(large.next_denominator.has_value());
    CHECK(*large.next_denominator > 169229911);
    CHECK(*large.next_denominator == BigInt(1856146412));
}

TEST_CASE("certified convergents are a prefix of the exact expansion") {
    for (unsigned digits = 1; digits <= delta_max_digits; ++digits) {
        const auto d = delta_constant(digits);
        const auto e = continued_fraction_convergents(d, 200000000);
        const auto exact = euclid_denominators(d.value);
        const auto qs = denominators(e);
        CAPTURE(digits);
        REQUIRE(qs.size() <= exact.size());
        CHECK(std::equal(qs.begin(), qs.end(), exact.begin()));
        // Every emitted term must also agree with the higher-precision value.
        const auto reference = euclid_denominators(delta_constant(20).value);
        CHECK(std::equal(qs.begin(), qs.end(), reference.begin()));
        if (!e.truncated) {
            REQUIRE(e.next_denominator.has_value());
        }
        for (std::size_t i = 1; i < e.convergents.size(); ++i) {
            const auto& a = e.convergents[i - 1];
            const auto& b = e.convergents[i];
            BigInt det = a.p * b.q - b.p * a.q;
            CHECK(abs(det) == 1);
        }
    }
    CHECK(continued_fraction_convergents(delta_constant(8), 200000000).truncated);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(continued_fraction_convergents(Decimal::parse("1.5"), 10), DomainError);
    CHECK_THROWS_AS(continued_fraction_convergents(Decimal::parse("0"), 10), DomainError);
    CHECK_THROWS_AS(continued_fraction_convergents(Decimal::parse("0.5"), 0), DomainError);
}

}
