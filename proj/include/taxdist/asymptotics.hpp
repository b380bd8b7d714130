#pragma once

#include <cstddef>
#include <cstdint>

namespace taxdist {

/// Volume V0 r^k of a k-dimensional set of volume V0 scaled by r.
double scaled_volume(double v0, double r, int k);

/// Density k lambda V0 r^(k-1) exp(-lambda V0 r^k) of the nearest-neighbor distance r.
double nn_distance_density(double r, int k, double lambda, double v0);

/// E(r) = Gamma(1 + 1/k) / (lambda V0)^(1/k).
double expected_nn_distance(int k, double lambda, double v0);

/// Volume at the expected radius, Gamma(1 + 1/k)^k / lambda; independent of V0.
double volume_at_expected(int k, double lambda);

struct MonteCarloEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/**
 * Monte Carlo estimate of E[min(|x_1|, ..., |x_n|)] for n points drawn
 * independently and uniformly from [-L, L]. Deterministic per seed.
 */
MonteCarloEstimate uniform_interval_expected_nn(std::size_t n, double half_width,
                                                std::uint64_t samples, std::uint64_t seed);

/// Conjectured closed form L / (n + 1) for the expectation above.
double conjectured_expected_nn(std::size_t n, double half_width);

} // namespace taxdist
