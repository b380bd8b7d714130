#pragma once

#include <cstdint>

namespace taxdist {

/**
 * @brief Exact fraction with the denominator of its defining count.
 *
 * Not reduced: the denominator is NEAR(X) for one-column augmentation
 * robustness, n k for leave-one-column-out robustness and n for concordance.
 * Equality compares values.
 */
struct RationalScore {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }

    friend bool operator==(const RationalScore& a, const RationalScore& b) {
        return static_cast<unsigned __int128>(a.numerator) * b.denominator ==
               static_cast<unsigned __int128>(b.numerator) * a.denominator;
    }
};

} // namespace taxdist
