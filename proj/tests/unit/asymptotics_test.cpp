#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "taxdist/asymptotics.hpp"
#include "taxdist/error.hpp"

using namespace taxdist;

TEST_SUITE("asymptotics") {

TEST_CASE("scaled volume") {
    CHECK(scaled_volume(1, 1, 5) == 1);
    CHECK(scaled_volume(2, 3, 2) == 18);
    CHECK(scaled_volume(std::numbers::pi, 2, 2) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-15));
    CHECK_THROWS_AS(scaled_volume(0, 1, 1), DomainError);
    CHECK_THROWS_AS(scaled_volume(1, -1, 1), DomainError);
    CHECK_THROWS_AS(scaled_volume(1, 1, 0), DomainError);
}

TEST_CASE("disk areas scale with the square of the radius") {
    auto rng = oracle::make_rng(61);
    std::uniform_real_distribution<double> u(-2, 2);
    const int samples = 400000;
    int small = 0;
    int large = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        const double r2 = x * x + y * y;
        small += r2 <= 1;
        large += r2 <= 4;
    }
    const double unit_area = 16.0 * small / samples;
    const double big_area = 16.0 * large / samples;
    CHECK(unit_area == doctest::Approx(std::numbers::pi).epsilon(0.01));
    CHECK(big_area / unit_area == doctest::Approx(scaled_volume(std::numbers::pi, 2, 2) / std::numbers::pi).epsilon(0.02));
}

TEST_CASE("expected nearest-neighbor distance") {
    CHECK(expected_nn_distance(1, 1, 1) == doctest::Approx(1).epsilon(1e-15));
    CHECK(expected_nn_distance(2, 1, 1) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
    CHECK(expected_nn_distance(3, 2, 5) == doctest::Approx(std::tgamma(4.0 / 3) / std::cbrt(10.0)).epsilon(1e-14));
    CHECK_THROWS_AS(expected_nn_distance(0, 1, 1), DomainError);
    CHECK_THROWS_AS(expected_nn_distance(1, 0, 1), DomainError);
    CHECK_THROWS_AS(expected_nn_distance(1, 1, -2), DomainError);
}

TEST_CASE("density and mean agree with quadrature") {
    for (int k = 1; k <= 6; ++k) {
        for (double a : {0.1, 1.0, 10.0}) {
            for (double lambda : {a, 1.0}) {
                const double v0 = a / lambda;
                CAPTURE(k);
                CAPTURE(a);
                CHECK(oracle::close(expected_nn_distance(k, lambda, v0), oracle::quadrature_expected_nn(k, lambda, v0), 1e-8));
                CHECK(std::fabs(oracle::quadrature_mass(k, lambda, v0) - 1) <= 1e-8);
                for (double r : {0.05, 0.5, 1.3}) {
                    CHECK(oracle::close(nn_distance_density(r, k, lambda, v0), oracle::nn_density(r, k, lambda, v0), 1e-13));
                }
            }
        }
    }
}

TEST_CASE("volume at the expected radius does not depend on the base volume") {
    CHECK(volume_at_expected(1, 1) == doctest::Approx(1).epsilon(1e-15));
    CHECK(volume_at_expected(2, 1) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
    for (int k = 1; k <= 6; ++k) {
        for (double lambda : {0.3, 3.0}) {
            const double expected = volume_at_expected(k, lambda);
            for (double v0 : {0.5, 1.0, 7.0}) {
                CHECK(oracle::close(scaled_volume(v0, expected_nn_distance(k, lambda, v0), k), expected, 1e-12));
            }
        }
    }
}

TEST_CASE("uniform interval Monte Carlo") {
    const std::uint64_t samples = 200000;
    for (std::size_t n : {1u, 2u, 3u, 9u}) {
        const auto e = uniform_interval_expected_nn(n, 1.0, samples, 100 + n);
        CAPTURE(n);
        CHECK(e.samples == samples);
        CHECK(e.seed == 100 + n);
        CHECK(e.standard_error > 0);
        CHECK(std::fabs(e.mean - 1.0 / (n + 1)) <= 3 * e.standard_error);
    }
    const auto again = uniform_interval_expected_nn(2, 1.0, samples, 102);
    const auto first = uniform_interval_expected_nn(2, 1.0, samples, 102);
    CHECK(again.mean == first.mean);
    CHECK(again.standard_error == first.standard_error);
}

TEST_CASE("Monte Carlo estimates grow linearly with the half width") {
    for (std::size_t n : {1u, 3u}) {
        const auto a = uniform_interval_expected_nn(n, 1.5, 100000, 7);
        const auto b = uniform_interval_expected_nn(n, 3.0, 100000, 8);
        const double se = std::sqrt(b.standard_error * b.standard_error + 4 * a.standard_error * a.standard_error);
        CHECK(std::fabs(b.mean - 2 * a.mean) <= 3 * se);
    }
}

TEST_CASE("Monte Carlo input validation") {
    CHECK_THROWS_AS(uniform_interval_expected_nn(0, 1, 10, 1), DomainError);
    CHECK_THROWS_AS(uniform_interval_expected_nn(1, 0, 10, 1), DomainError);
    CHECK_THROWS_AS(uniform_interval_expected_nn(1, 1, 0, 1), DomainError);
    const auto one = uniform_interval_expected_nn(1, 1, 1, 1);
    CHECK(one.standard_error == 0);
}

TEST_CASE("conjectured mean") {
    CHECK(conjectured_expected_nn(1, 2) == 1);
    CHECK(conjectured_expected_nn(3, 4) == 1);
    CHECK(conjectured_expected_nn(9, 1) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK_THROWS_AS(conjectured_expected_nn(0, 1), DomainError);
}

}
