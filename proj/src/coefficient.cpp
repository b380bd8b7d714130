#include "taxdist/coefficient.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "taxdist/error.hpp"

namespace taxdist {

Rational to_rational(double value) {
    if (!std::isfinite(value)) {
        throw DomainError("only finite doubles have an exact rational value");
    }
    if (value == 0.0) {
        return Rational(0);
    }
    int exponent = 0;
    const double mantissa = std::frexp(value, &exponent);
    // mantissa * 2^53 is an integer for every finite double.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r(scaled);
    if (exponent >= 0) {
        r *= Rational(BigInt(1) << exponent);
    } else {
        r /= Rational(BigInt(1) << -exponent);
    }
    return r;
}

Coefficient Coefficient::p_norm(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw DomainError("p-norm exponent must lie in [1, inf]");
    }
    if (std::isinf(p)) {
        return max_norm();
    }
    return Coefficient(Kind::PNorm, false, p);
}

Coefficient Coefficient::max_norm() {
    return Coefficient(Kind::PNorm, true, std::numeric_limits<double>::infinity());
}

Coefficient Coefficient::squared_euclidean() {
    return Coefficient(Kind::SquaredEuclidean, false, 2.0);
}

Coefficient Coefficient::parse(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "l") {
        return squared_euclidean();
    }
    if (lower.size() < 2 || lower.front() != 'p') {
        throw DomainError("unknown coefficient '" + std::string(text) + "' (expected p1, p2, pinf, p<decimal> or L)");
    }
    const std::string_view digits = std::string_view(lower).substr(1);
    if (digits == "inf") {
        return max_norm();
    }
    double p = 0.0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p,
                                           std::chars_format::fixed);
    if (ec != std::errc{} || end != digits.data() + digits.size() || !std::isfinite(p)) {
        throw DomainError("unknown coefficient '" + std::string(text) + "' (expected p1, p2, pinf, p<decimal> or L)");
    }
    if (p < 1.0) {
        throw DomainError("coefficient '" + std::string(text) + "': p must be at least 1");
    }
    return p_norm(p);
}

double Coefficient::exponent() const {
    return p_;
}

std::string Coefficient::to_string() const {
    if (kind_ == Kind::SquaredEuclidean) {
        return "L";
    }
    if (infinite_) {
        return "pinf";
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p_);
    return "p" + std::string(buf, end);
}

namespace {

// Sum of (w * 2^shift)^2 as an unevaluated pair hi + lo, error-free per term.
std::pair<double, double> sum_of_squares(std::span<const double> v, int shift) {
    double hi = 0.0;
    double lo = 0.0;
    for (double w : v) {
        const double x = shift == 0 ? w : std::ldexp(w, shift);
        const double sq = x * x;
        const double sq_err = std::fma(x, x, -sq);
        const double sum = hi + sq;
        const double bv = sum - hi;
        lo += (hi - (sum - bv)) + (sq - bv) + sq_err;
        hi = sum;
    }
    const double total = hi + lo;
    return {total, lo - (total - hi)};
}

// sqrt(hi + lo) with one Newton correction.
double accurate_sqrt(double hi, double lo) {
    if (hi <= 0.0) {
        return 0.0;
    }
    const double r = std::sqrt(hi);
    const double residual = std::fma(-r, r, hi) + lo;
    return r + residual / (2.0 * r);
}

} // namespace

namespace detail {

double evaluate_unchecked(const Coefficient& c, std::span<const double> v) {
    if (c.kind() == Coefficient::Kind::SquaredEuclidean) {
        const auto [hi, lo] = sum_of_squares(v, 0);
        return hi + lo;
    }
    if (c.is_max_norm()) {
        double m = 0.0;
        for (double w : v) {
            m = std::max(m, std::fabs(w));
        }
        return m;
    }
    const double p = c.exponent();
    if (p == 1.0) {
        double s = 0.0;
        for (double w : v) {
            s += std::fabs(w);
        }
        return s;
    }
    double m = 0.0;
    for (double w : v) {
        m = std::max(m, std::fabs(w));
    }
    if (m == 0.0) {
        return 0.0;
    }
    if (p == 2.0) {
        // Power-of-two scaling is exact, so only the root itself rounds.
        const int e = std::ilogb(m);
        const auto [hi, lo] = sum_of_squares(v, -e);
        return std::ldexp(accurate_sqrt(hi, lo), e);
    }
    // m (sum (|w|/m)^p)^(1/p): no overflow for large p or large entries.
    double s = 0.0;
    for (double w : v) {
        s += std::pow(std::fabs(w) / m, p);
    }
    return m * std::pow(s, 1.0 / p);
}

} // namespace detail

double evaluate(const Coefficient& c, std::span<const double> v) {
    if (v.empty()) {
        throw DomainError("cannot evaluate a coefficient on an empty vector");
    }
    for (double w : v) {
        if (!std::isfinite(w)) {
            throw DomainError("vector entries must be finite");
        }
    }
    return detail::evaluate_unchecked(c, v);
}

bool is_true_norm(const Coefficient& c) {
    return c.is_p_norm();
}

bool supports_exact(const Coefficient& c) {
    return c.kind() == Coefficient::Kind::SquaredEuclidean || c.is_max_norm() || c.exponent() == 1.0;
}

Rational evaluate_exact(const Coefficient& c, std::span<const Rational> v) {
    if (v.empty()) {
        throw DomainError("cannot evaluate a coefficient on an empty vector");
    }
    if (!supports_exact(c)) {
        throw DomainError("coefficient " + c.to_string() + " has no exact rational form");
    }
    Rational acc(0);
    for (const Rational& w : v) {
        const Rational a = w < 0 ? Rational(-w) : w;
        if (c.kind() == Coefficient::Kind::SquaredEuclidean) {
            acc += a * a;
        } else if (c.is_max_norm()) {
            if (a > acc) {
                acc = a;
            }
        } else {
            acc += a;
        }
    }
    return acc;
}

} // namespace taxdist
