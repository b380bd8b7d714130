#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "taxdist/coefficient.hpp"
#include "taxdist/error.hpp"

using namespace taxdist;

namespace {

double eval(const Coefficient& c, std::vector<double> v) { return evaluate(c, v); }

std::vector<Coefficient> norms() {
    return {Coefficient::p_norm(1), Coefficient::p_norm(1.5), Coefficient::p_norm(2), Coefficient::p_norm(3),
            Coefficient::p_norm(7), Coefficient::max_norm()};
}

} // namespace

TEST_SUITE("coefficient") {

TEST_CASE("evaluate on worked vectors") {
    CHECK(eval(Coefficient::max_norm(), {3, -30}) == 30);
    CHECK(eval(Coefficient::p_norm(1), {0, 0, 0}) == 0);
    CHECK(eval(Coefficient::p_norm(2), {-3, std::sqrt(3.0)}) == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(eval(Coefficient::p_norm(1), {3, -30}) == 33);
    CHECK(eval(Coefficient::squared_euclidean(), {1, -2, 2}) == 9);
}

TEST_CASE("only p-norms are true norms") {
    CHECK(is_true_norm(Coefficient::p_norm(2)));
    CHECK(is_true_norm(Coefficient::max_norm()));
    CHECK(is_true_norm(Coefficient::p_norm(1.25)));
    CHECK_FALSE(is_true_norm(Coefficient::squared_euclidean()));
}

TEST_CASE("infinite exponent is the max norm") {
    const auto c = Coefficient::p_norm(std::numeric_limits<double>::infinity());
    CHECK(c.is_max_norm());
    CHECK(c == Coefficient::max_norm());
    CHECK_THROWS_AS(Coefficient::p_norm(0.5), DomainError);
    CHECK_THROWS_AS(Coefficient::p_norm(std::nan("")), DomainError);
}

TEST_CASE("textual syntax") {
    CHECK(Coefficient::parse("p1") == Coefficient::p_norm(1));
    CHECK(Coefficient::parse("P2") == Coefficient::p_norm(2));
    CHECK(Coefficient::parse("pinf") == Coefficient::max_norm());
    CHECK(Coefficient::parse("PINF") == Coefficient::max_norm());
    CHECK(Coefficient::parse("p3.5") == Coefficient::p_norm(3.5));
    CHECK(Coefficient::parse("L") == Coefficient::squared_euclidean());
    CHECK(Coefficient::parse("l") == Coefficient::squared_euclidean());
    for (const char* bad : {"", "p", "q2", "p0.5", "p2x", "pabc", "LL", "p-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Coefficient::parse(bad), DomainError);
    }
    for (const auto& c : norms()) {
        CHECK(Coefficient::parse(c.to_string()) == c);
    }
    CHECK(Coefficient::squared_euclidean().to_string() == "L");
    CHECK(Coefficient::max_norm().to_string() == "pinf");
}

TEST_CASE("invalid vectors are rejected") {
    CHECK_THROWS_AS(eval(Coefficient::p_norm(2), {}), DomainError);
    CHECK_THROWS_AS(eval(Coefficient::p_norm(2), {1, std::nan("")}), DomainError);
    CHECK_THROWS_AS(eval(Coefficient::max_norm(), {std::numeric_limits<double>::infinity()}), DomainError);
}

TEST_CASE("matches the direct formula on random vectors") {
    auto rng = oracle::make_rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const auto c = oracle::random_coefficient(rng);
        const auto x = oracle::random_matrix(rng, 1, oracle::pick(rng, 1, 8), -10, 10);
        const std::vector<double> v(x.values().begin(), x.values().end());
        CHECK(oracle::close(eval(c, v), oracle::norm(c, v), 1e-12));
    }
}

TEST_CASE("norm axioms on random vectors") {
    auto rng = oracle::make_rng(12);
    std::uniform_real_distribution<double> scale(-5, 5);
    for (int trial = 0; trial < 400; ++trial) {
        const auto k = oracle::pick(rng, 1, 6);
        const auto a = oracle::random_matrix(rng, 2, k, -3, 3);
        std::vector<double> v(a.row(0).begin(), a.row(0).end());
        std::vector<double> w(a.row(1).begin(), a.row(1).end());
        const double s = scale(rng);
        std::vector<double> sv(k), sum(k), zeros(k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            sv[i] = s * v[i];
            sum[i] = v[i] + w[i];
        }
        for (const auto& c : norms()) {
            CAPTURE(c.to_string());
            CHECK(eval(c, zeros) == 0);
            CHECK(eval(c, v) > 0);
            CHECK(oracle::close(eval(c, sv), std::fabs(s) * eval(c, v), 1e-12));
            CHECK(eval(c, sum) <= (eval(c, v) + eval(c, w)) * (1 + 1e-12));
            CHECK(eval(c, {1.0}) == 1);
            // Zero entries do not contribute.
            std::vector<double> padded = v;
            padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(oracle::pick(rng, 0, k)), 0.0);
            CHECK(eval(c, padded) == eval(c, v));
        }
    }
}

TEST_CASE("larger exponents give smaller norms") {
    auto rng = oracle::make_rng(13);
    const auto ordered = norms();
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = oracle::random_matrix(rng, 1, oracle::pick(rng, 1, 7), -4, 4);
        const std::vector<double> v(x.values().begin(), x.values().end());
        for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
            CHECK(eval(ordered[i + 1], v) <= eval(ordered[i], v) * (1 + 1e-12));
        }
    }
}

TEST_CASE("squared Euclidean is the square of the 2-norm") {
    auto rng = oracle::make_rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = oracle::random_matrix(rng, 1, oracle::pick(rng, 1, 7), -4, 4);
        const std::vector<double> v(x.values().begin(), x.values().end());
        const double n2 = eval(Coefficient::p_norm(2), v);
        CHECK(oracle::close(eval(Coefficient::squared_euclidean(), v), n2 * n2, 1e-12));
    }
}

TEST_CASE("scaled evaluation survives extreme magnitudes") {
    CHECK(oracle::close(eval(Coefficient::p_norm(3), {1e200, 1e200}), 1e200 * std::cbrt(2.0), 1e-14));
    CHECK(oracle::close(eval(Coefficient::p_norm(2), {3e-200, 4e-200}), 5e-200, 1e-14));
    CHECK(oracle::close(eval(Coefficient::p_norm(2), {3e200, 4e200}), 5e200, 1e-14));
    CHECK(oracle::close(eval(Coefficient::p_norm(40), {1e300, 1e300}), 1e300 * std::pow(2.0, 1.0 / 40), 1e-14));
}

TEST_CASE("exact evaluation") {
    CHECK(supports_exact(Coefficient::p_norm(1)));
    CHECK(supports_exact(Coefficient::max_norm()));
    CHECK(supports_exact(Coefficient::squared_euclidean()));
    CHECK_FALSE(supports_exact(Coefficient::p_norm(2)));
    const std::vector<Rational> v{Rational(1, 3), Rational(-1, 2)};
    CHECK(evaluate_exact(Coefficient::p_norm(1), v) == Rational(5, 6));
    CHECK(evaluate_exact(Coefficient::max_norm(), v) == Rational(1, 2));
    CHECK(evaluate_exact(Coefficient::squared_euclidean(), v) == Rational(13, 36));
    CHECK_THROWS_AS(evaluate_exact(Coefficient::p_norm(2), v), DomainError);
    CHECK(to_rational(0.1) == Rational(3602879701896397, BigInt(1) << 55));
    CHECK(to_rational(-2.5) == Rational(-5, 2));
}

}
