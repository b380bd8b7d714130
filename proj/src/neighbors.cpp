#include "taxdist/neighbors.hpp"

#include <cmath>
#include <random>
#include <string>

#include "taxdist/detail/random.hpp"
#include "taxdist/distance.hpp"

namespace taxdist {

void TiePolicy::validate() const {
    if (!(relative_tolerance >= 0.0) || !(absolute_tolerance >= 0.0) ||
        !std::isfinite(relative_tolerance) || !std::isfinite(absolute_tolerance)) {
        throw DomainError("tie tolerances must be finite and nonnegative");
    }
}

NeighborSets::NeighborSets(std::vector<std::vector<std::size_t>> sets, ZeroDistanceRule rule)
    : sets_(std::move(sets)) {
    const std::size_t n = sets_.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& s = sets_[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw DomainError("neighbor set " + std::to_string(i) + " repeats an index");
        }
        for (std::size_t j : s) {
            if (j >= n || j == i) {
                throw DomainError("neighbor set " + std::to_string(i) + " contains an invalid index");
            }
        }
        if (n > 1 && s.empty() && rule == ZeroDistanceRule::Nearest) {
            throw DomainError("row " + std::to_string(i) + " has no nearest neighbor");
        }
        total_ += s.size();
    }
    // Symmetry of distances rules out exactly one missing relation.
    if (n > 1 && total_ == n * (n - 1) - 1) {
        throw DomainError("nearest-neighbor total n(n-1)-1 is impossible for a symmetric matrix; "
                          "the tie tolerance is too coarse for this data");
    }
}

NeighborSets nearest_sets(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie) {
    return nearest_sets(build(c, x), tie);
}

NeighborSets nearest_sets_exact(const Coefficient& c, const DataMatrix& x, ZeroDistanceRule rule) {
    TiePolicy tie = TiePolicy::exact();
    tie.zero_rule = rule;
    return nearest_sets(build_exact(c, to_rational(x)), tie);
}

namespace {

std::size_t total_for(const Coefficient& c, std::size_t n, std::size_t k, const std::vector<double>& values) {
    return nearest_sets(c, DataMatrix(n, k, values)).total();
}

// levels^cells, or 0 when it exceeds `cap`.
std::uint64_t bounded_power(std::uint64_t levels, std::size_t cells, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (levels != 0 && count > cap / levels) {
            return 0;
        }
        count *= levels;
    }
    return count <= cap ? count : 0;
}

} // namespace

std::set<std::size_t> achievable_near_totals(std::size_t n, const Coefficient& c,
                                             const NearSearchBudget& budget, std::uint64_t seed) {
    if (n < 2) {
        throw DomainError("the NEAR search needs at least two rows");
    }
    if (budget.columns == 0 || budget.grid_levels == 0) {
        throw DomainError("search budget needs at least one column and one grid level");
    }
    const std::size_t k = budget.columns;
    const std::size_t cells = n * k;
    std::mt19937_64 rng(seed);
    std::set<std::size_t> seen;

    std::vector<double> values(cells, 0.0);
    const std::uint64_t grid_size = bounded_power(budget.grid_levels, cells, budget.max_exhaustive);
    if (grid_size != 0) {
        std::vector<std::uint32_t> digits(cells, 0);
        for (std::uint64_t step = 0; step < grid_size; ++step) {
            for (std::size_t i = 0; i < cells; ++i) {
                values[i] = digits[i];
            }
            seen.insert(total_for(c, n, k, values));
            for (std::size_t i = 0; i < cells; ++i) {
                if (++digits[i] < budget.grid_levels) {
                    break;
                }
                digits[i] = 0;
            }
        }
    } else {
        for (std::uint64_t s = 0; s < budget.random_samples; ++s) {
            for (double& v : values) {
                v = static_cast<double>(detail::uniform_below(rng, budget.grid_levels));
            }
            seen.insert(total_for(c, n, k, values));
        }
    }

    for (std::uint64_t s = 0; s < budget.random_samples; ++s) {
        for (double& v : values) {
            v = 2.0 * detail::unit_uniform(rng) - 1.0;
        }
        seen.insert(total_for(c, n, k, values));
    }

    // Structured probes: identical rows, equally spaced collinear rows, and
    // the standard basis (all pairwise distances equal for every coefficient).
    seen.insert(total_for(c, n, 1, std::vector<double>(n, 0.0)));
    std::vector<double> line(n);
    for (std::size_t i = 0; i < n; ++i) {
        line[i] = static_cast<double>(i);
    }
    seen.insert(total_for(c, n, 1, line));
    std::vector<double> basis(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        basis[i * n + i] = 1.0;
    }
    seen.insert(total_for(c, n, n, basis));
    return seen;
}

} // namespace taxdist
