#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "taxdist/coefficient.hpp"
#include "taxdist/error.hpp"
#include "taxdist/matrix.hpp"

namespace taxdist {

/// How a zero off-diagonal distance (duplicate rows) is treated.
enum class ZeroDistanceRule {
    Nearest,  ///< 0 is the smallest possible distance; duplicates are nearest neighbors.
    Ignore,   ///< only the smallest positive distance counts.
};

/**
 * @brief Floating-point tie detection for nearest-neighbor sets.
 *
 * In row i with minimum off-diagonal distance m, index j is a nearest
 * neighbor when d(i,j) <= m + max(absolute_tolerance, relative_tolerance * m).
 * Exact (rational) distance matrices ignore both tolerances.
 */
struct TiePolicy {
    double relative_tolerance = 1e-9;
    double absolute_tolerance = 0.0;
    ZeroDistanceRule zero_rule = ZeroDistanceRule::Nearest;

    static TiePolicy exact() { return TiePolicy{0.0, 0.0, ZeroDistanceRule::Nearest}; }

    void validate() const;
};

/**
 * @brief NEAR(i) for every row plus their total size.
 *
 * Indices are 0-based and each set is sorted. Construction checks the
 * structural bounds: with n > 1 every set is nonempty (under the default
 * zero rule), so n <= total <= n(n-1), and total != n(n-1) - 1.
 */
class NeighborSets {
public:
    explicit NeighborSets(std::vector<std::vector<std::size_t>> sets,
                          ZeroDistanceRule rule = ZeroDistanceRule::Nearest);

    std::size_t order() const { return sets_.size(); }
    const std::vector<std::size_t>& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }
    std::size_t total() const { return total_; }

    friend bool operator==(const NeighborSets& a, const NeighborSets& b) { return a.sets_ == b.sets_; }

private:
    std::vector<std::vector<std::size_t>> sets_;
    std::size_t total_ = 0;
};

template <typename T>
NeighborSets nearest_sets(const BasicDistanceMatrix<T>& d, const TiePolicy& tie = {}) {
    tie.validate();
    const std::size_t n = d.order();
    std::vector<std::vector<std::size_t>> sets(n);
    if (n == 1) {
        return NeighborSets(std::move(sets), tie.zero_rule);
    }
    const bool skip_zero = tie.zero_rule == ZeroDistanceRule::Ignore;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = d.row(i);
        bool found = false;
        T least{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || (skip_zero && row[j] == T(0))) {
                continue;
            }
            if (!found || row[j] < least) {
                least = row[j];
                found = true;
            }
        }
        if (!found) {
            continue;
        }
        T threshold = least;
        if constexpr (std::is_floating_point_v<T>) {
            threshold = least + std::max(tie.absolute_tolerance, tie.relative_tolerance * least);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || (skip_zero && row[j] == T(0))) {
                continue;
            }
            if (row[j] <= threshold) {
                sets[i].push_back(j);
            }
        }
    }
    return NeighborSets(std::move(sets), tie.zero_rule);
}

/// Builds D(c, X) and returns its nearest-neighbor sets.
NeighborSets nearest_sets(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie = {});

/// Exact-arithmetic sets for p = 1, p = inf or L, with tolerance-free ties.
NeighborSets nearest_sets_exact(const Coefficient& c, const DataMatrix& x,
                                ZeroDistanceRule rule = ZeroDistanceRule::Nearest);

inline std::size_t near_total(const NeighborSets& s) { return s.total(); }

/// Bounds of the searched family in achievable_near_totals().
struct NearSearchBudget {
    std::size_t columns = 1;           ///< k of each probed matrix
    std::uint32_t grid_levels = 4;     ///< integer coordinates 0..grid_levels-1
    std::uint64_t max_exhaustive = 250000;  ///< enumerate the grid when it has at most this many matrices
    std::uint64_t random_samples = 512;     ///< random grid and continuous probes otherwise / in addition
};

/**
 * Distinct NEAR totals observed over a searched family of n-row matrices:
 * the integer grid (exhaustively when small enough, sampled otherwise),
 * continuous random matrices, and a few structured configurations.
 * Empirical: a value missing from the result is not proven unattainable.
 */
std::set<std::size_t> achievable_near_totals(std::size_t n, const Coefficient& c,
                                             const NearSearchBudget& budget, std::uint64_t seed);

} // namespace taxdist
