#include "taxdist/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "taxdist/detail/random.hpp"
#include "taxdist/error.hpp"

namespace taxdist {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

void require_dimension(int k) {
    if (k < 1) {
        throw DomainError("dimension k must be at least 1");
    }
}

} // namespace

double scaled_volume(double v0, double r, int k) {
    require_positive(v0, "V0");
    require_positive(r, "r");
    require_dimension(k);
    return v0 * std::pow(r, k);
}

double nn_distance_density(double r, int k, double lambda, double v0) {
    require_dimension(k);
    require_positive(lambda, "lambda");
    require_positive(v0, "V0");
    if (r < 0.0) {
        return 0.0;
    }
    const double rate = lambda * v0;
    return k * rate * std::pow(r, k - 1) * std::exp(-rate * std::pow(r, k));
}

double expected_nn_distance(int k, double lambda, double v0) {
    require_dimension(k);
    require_positive(lambda, "lambda");
    require_positive(v0, "V0");
    const double inv_k = 1.0 / k;
    return std::tgamma(1.0 + inv_k) / std::pow(lambda * v0, inv_k);
}

double volume_at_expected(int k, double lambda) {
    require_dimension(k);
    require_positive(lambda, "lambda");
    return std::pow(std::tgamma(1.0 + 1.0 / k), k) / lambda;
}

MonteCarloEstimate uniform_interval_expected_nn(std::size_t n, double half_width, std::uint64_t samples,
                                                std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("need at least one point per sample");
    }
    require_positive(half_width, "L");
    if (samples < 1) {
        throw DomainError("need at least one Monte Carlo sample");
    }
    std::mt19937_64 rng(seed);
    // Welford running mean and variance.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double nearest = half_width;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = half_width * (2.0 * detail::unit_uniform(rng) - 1.0);
            nearest = std::min(nearest, std::fabs(x));
        }
        const double delta = nearest - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (nearest - mean);
    }
    MonteCarloEstimate est;
    est.mean = mean;
    est.samples = samples;
    est.seed = seed;
    est.standard_error = samples > 1
        ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples))
        : 0.0;
    return est;
}

double conjectured_expected_nn(std::size_t n, double half_width) {
    if (n < 1) {
        throw DomainError("need at least one point");
    }
    require_positive(half_width, "L");
    return half_width / static_cast<double>(n + 1);
}

} // namespace taxdist
