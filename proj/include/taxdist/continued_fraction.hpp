#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxdist/rational.hpp"

namespace taxdist {

/**
 * @brief A decimal number known to lie within +/- uncertainty of its value.
 *
 * `text` is the decimal representation `value` was read from.
 */
struct Decimal {
    std::string text;
    Rational value;
    Rational uncertainty;

    /// Parses plain decimal notation ("0.5703", "-1.25"). Exact unless an uncertainty is given.
    static Decimal parse(std::string_view text, const Rational& uncertainty = Rational(0));

    /// Uncertainty of half a unit in the last printed place.
    static Decimal parse_rounded(std::string_view text);
};

/// Euler-Mascheroni constant to 22 significant digits.
inline constexpr std::string_view euler_gamma_text = "0.5772156649015328606065";

inline constexpr unsigned delta_max_digits = 20;

/**
 * exp(-exp(-gamma)) rounded to `digits` decimal places, computed at 50-digit
 * working precision from euler_gamma_text. The uncertainty covers the
 * rounding and the truncation of gamma. DomainError unless 1 <= digits <= 20.
 */
Decimal delta_constant(unsigned digits);

struct Convergent {
    BigInt p;
    BigInt q;
};

struct ConvergentExpansion {
    std::vector<Convergent> convergents;    ///< certified, denominators <= max_q
    std::vector<BigInt> partial_quotients;  ///< the terms behind each convergent
    bool truncated = false;                 ///< input precision ran out before max_q
    std::optional<BigInt> next_denominator; ///< certified first denominator beyond max_q
};

/**
 * Continued-fraction convergents of every number in x's uncertainty interval.
 * A term is emitted only when both interval endpoints agree on it; otherwise
 * the expansion stops with `truncated` set. Requires 0 < x < 1.
 */
ConvergentExpansion continued_fraction_convergents(const Decimal& x, std::uint64_t max_q);

} // namespace taxdist
