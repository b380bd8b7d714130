#include "taxdist/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "taxdist/distance.hpp"
#include "taxdist/error.hpp"

namespace taxdist {

RationalScore rob_plus(const Coefficient& c, const DataMatrix& x, const DataMatrix& xp, const TiePolicy& tie) {
    if (x.rows() < 2) {
        throw DomainError("robustness needs at least two rows");
    }
    if (!is_one_column_extension(x, xp)) {
        throw DomainError("augmented matrix must be X with exactly one appended column");
    }
    const NeighborSets before = nearest_sets(c, x, tie);
    const NeighborSets after = nearest_sets(c, xp, tie);
    if (before.total() == 0) {
        throw DomainError("no row of X has a nearest neighbor under this tie policy");
    }
    std::uint64_t kept = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto& a = before[i];
        const auto& b = after[i];
        std::vector<std::size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        kept += common.size();
    }
    return RationalScore{kept, before.total()};
}

std::vector<std::size_t> column_change_counts(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie) {
    if (x.rows() < 2) {
        throw DomainError("robustness needs at least two rows");
    }
    if (x.cols() < 2) {
        throw DomainError("leave-one-column-out robustness needs at least two columns");
    }
    const NeighborSets full = nearest_sets(c, x, tie);
    std::vector<std::size_t> counts(x.cols(), 0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        const NeighborSets reduced = nearest_sets(c, remove_column(x, j), tie);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            if (full[i] != reduced[i]) {
                ++counts[j];
            }
        }
    }
    return counts;
}

RationalScore rob_minus(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie) {
    const auto counts = column_change_counts(c, x, tie);
    std::uint64_t changed = 0;
    for (std::size_t v : counts) {
        changed += v;
    }
    const std::uint64_t denominator = static_cast<std::uint64_t>(x.rows()) * x.cols();
    return RationalScore{denominator - changed, denominator};
}

SpacingTable::SpacingTable(std::size_t n) : n_(n) {
    if (n < 2) {
        throw DomainError("spacing values need at least two rows");
    }
    if (n > max_order) {
        throw DomainError("spacing values overflow 64-bit integers beyond n = " + std::to_string(max_order));
    }
}

std::uint64_t SpacingTable::operator()(std::size_t i, std::size_t j) const {
    const std::uint64_t a = std::uint64_t{1} << (i + 1);
    const std::uint64_t b = std::uint64_t{1} << (j + 1);
    return a > b ? a - b : b - a;
}

namespace {

enum class Outcome { Accepted, ScaleTooLarge, ScaleTooSmall };

} // namespace

AdversarialResult adversarial_augment(const Coefficient& c, const DataMatrix& x, const TiePolicy& tie) {
    if (!c.is_p_norm()) {
        throw DomainError("adversarial augmentation is defined for p-norms only");
    }
    const std::size_t n = x.rows();
    if (n < 2) {
        throw DomainError("adversarial augmentation needs at least two rows");
    }
    const SpacingTable u(n);
    std::vector<std::uint64_t> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::uint64_t{1} << i;
    }

    const DistanceMatrix base = build(c, x);
    const NeighborSets base_sets = nearest_sets(base, tie);
    if (base_sets.total() == 0) {
        throw DomainError("no row of X has a nearest neighbor under this tie policy");
    }

    // The neighbor each row must end up with.
    std::vector<std::size_t> target(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        auto consider = [&](std::size_t j) {
            if (j != i && u(i, j) < best) {
                best = u(i, j);
                target[i] = j;
            }
        };
        if (c.is_max_norm()) {
            for (std::size_t j = 0; j < n; ++j) {
                consider(j);
            }
        } else {
            for (std::size_t j : base_sets[i]) {
                consider(j);
            }
        }
    }

    auto augment = [&](double t) {
        std::vector<double> column(n);
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = t * static_cast<double>(y[i]);
        }
        return append_column(x, column);
    };

    auto classify = [&](double t, const NeighborSets& sets) {
        if (c.is_max_norm()) {
            // Large t only helps: once t u(i,j) / 2 dominates, d'(i,j) = t u(i,j).
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (t * static_cast<double>(u(i, j)) / 2.0 < base(i, j)) {
                        return Outcome::ScaleTooSmall;
                    }
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (sets[i].size() != 1 || sets[i][0] != target[i]) {
                    return Outcome::ScaleTooSmall;
                }
            }
            return Outcome::Accepted;
        }
        bool all_single = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = sets[i];
            if (!std::binary_search(s.begin(), s.end(), target[i])) {
                return Outcome::ScaleTooLarge;
            }
            for (std::size_t j : s) {
                if (!std::binary_search(base_sets[i].begin(), base_sets[i].end(), j)) {
                    return Outcome::ScaleTooLarge;
                }
            }
            all_single = all_single && s.size() == 1;
        }
        return all_single ? Outcome::Accepted : Outcome::ScaleTooSmall;
    };

    constexpr int max_steps = 200;
    double t = 1.0;
    double known_small = 0.0;
    double known_large = std::numeric_limits<double>::infinity();
    for (int step = 0; step < max_steps; ++step) {
        DataMatrix augmented = augment(t);
        NeighborSets sets = nearest_sets(c, augmented, tie);
        const Outcome outcome = classify(t, sets);
        if (outcome == Outcome::Accepted) {
            const RationalScore score = rob_plus(c, x, augmented, tie);
            if (sets.total() != n || score.numerator > n) {
                throw std::logic_error("adversarial augmentation failed its own verification");
            }
            return AdversarialResult{std::move(augmented), t, y, sets.total(), std::move(sets), score,
                                     base_sets.total()};
        }
        if (outcome == Outcome::ScaleTooLarge) {
            known_large = t;
            t = known_small > 0.0 ? std::sqrt(known_small * known_large) : t / 2.0;
        } else {
            known_small = t;
            t = std::isinf(known_large) ? t * 2.0 : std::sqrt(known_small * known_large);
        }
        if (!(t > 0.0) || !std::isfinite(t)) {
            break;
        }
    }
    throw DomainError("no scale t separating the nearest neighbors was found in " +
                      std::to_string(max_steps) + " steps");
}

} // namespace taxdist
