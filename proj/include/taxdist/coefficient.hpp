#pragma once

#include <span>
#include <string>
#include <string_view>

#include "taxdist/rational.hpp"

namespace taxdist {

/**
 * @brief A distance-defining function on row vectors.
 *
 * Either a p-norm with p in [1, inf] or the squared Euclidean
 * pseudo-coefficient L(v) = sum of squares. The max norm is a distinct
 * state, not a large finite exponent.
 */
class Coefficient {
public:
    enum class Kind { PNorm, SquaredEuclidean };

    /// p-norm for finite p >= 1; +infinity yields the max norm.
    static Coefficient p_norm(double p);
    static Coefficient max_norm();
    static Coefficient squared_euclidean();

    /**
     * Parses "p1", "p2", "pinf", "p<decimal>" or "L" (case-insensitive).
     * Throws DomainError on anything else, including p < 1.
     */
    static Coefficient parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_p_norm() const { return kind_ == Kind::PNorm; }
    bool is_max_norm() const { return kind_ == Kind::PNorm && infinite_; }

    /// The exponent p; +infinity for the max norm. Meaningless for L.
    double exponent() const;

    /// Canonical textual form, accepted back by parse().
    std::string to_string() const;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

private:
    Coefficient(Kind kind, bool infinite, double p) : kind_(kind), infinite_(infinite), p_(p) {}

    Kind kind_;
    bool infinite_;
    double p_;
};

/// N(v) for a p-norm, or L(v). Throws DomainError on empty or non-finite input.
double evaluate(const Coefficient& c, std::span<const double> v);

bool is_true_norm(const Coefficient& c);

/// True when evaluate_exact() can represent the value exactly (p = 1, p = inf, L).
bool supports_exact(const Coefficient& c);

Rational evaluate_exact(const Coefficient& c, std::span<const Rational> v);

namespace detail {
// No validation; v is nonempty and finite.
double evaluate_unchecked(const Coefficient& c, std::span<const double> v);
} // namespace detail

} // namespace taxdist
