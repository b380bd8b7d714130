#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "taxdist/coefficient.hpp"
#include "taxdist/matrix.hpp"
#include "taxdist/neighbors.hpp"
#include "taxdist/score.hpp"

namespace taxdist {

/**
 * Robustness of X with respect to a one-column extension Xp:
 * sum over rows of |NEAR(X,i) ∩ NEAR(Xp,i)|, over NEAR(X).
 *
 * Throws DomainError when n = 1 or Xp is not X with one appended column.
 */
RationalScore rob_plus(const Coefficient& c, const DataMatrix& x, const DataMatrix& xp,
                       const TiePolicy& tie = {});

/**
 * Leave-one-column-out robustness: 1 - (n_1 + ... + n_k) / (n k), where n_j
 * counts rows whose nearest-neighbor set changes when column j is dropped.
 * Requires n > 1 and k > 1.
 */
RationalScore rob_minus(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie = {});

/// Per-column change counts n_j behind rob_minus().
std::vector<std::size_t> column_change_counts(const Coefficient& c, const DataMatrix& x,
                                              const TiePolicy& tie = {});

/// u(i,j) = |2^(j+1) - 2^(i+1)| for 0-based i, j; u(i,i) = 0.
class SpacingTable {
public:
    static constexpr std::size_t max_order = 62;

    /// Throws DomainError unless 2 <= n <= max_order.
    explicit SpacingTable(std::size_t n);

    std::size_t order() const { return n_; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const;

private:
    std::size_t n_;
};

inline SpacingTable spacing_values(std::size_t n) { return SpacingTable(n); }

struct AdversarialResult {
    DataMatrix augmented;               ///< X with the column t * y appended
    double t = 0.0;
    std::vector<std::uint64_t> spacing;  ///< y(i) = 2^i for 0-based i
    std::size_t achieved_near_total = 0;
    NeighborSets neighbors;             ///< sets of the augmented matrix, all singletons
    RationalScore robustness;           ///< rob_plus(c, X, augmented)
    std::size_t original_near_total = 0;
};

/**
 * Appends t * y with y(i) = 2^i so that every row gets a unique nearest
 * neighbor, certifying rob_plus <= n / NEAR(X).
 *
 * For the max norm t grows until t u(i,j) / 2 dominates every original
 * distance; each row then pairs with its smallest-spacing partner. For finite
 * p, t is searched (from 1, geometrically) until each row's unique neighbor is
 * the smallest-spacing member of its original set. The outcome is verified by
 * recomputing the neighbor sets; DomainError if no t in 200 steps qualifies,
 * for n > SpacingTable::max_order, for n = 1, or for L.
 */
AdversarialResult adversarial_augment(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie = {});

} // namespace taxdist
