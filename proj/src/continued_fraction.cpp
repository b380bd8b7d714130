#include "taxdist/continued_fraction.hpp"

#include <cctype>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "taxdist/error.hpp"

namespace taxdist {

namespace {

BigInt pow10(std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= 10;
    }
    return r;
}

BigInt floor_of(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) {
        q -= 1;
    }
    return q;
}

} // namespace

Decimal Decimal::parse(std::string_view text, const Rational& uncertainty) {
    if (uncertainty < 0) {
        throw DomainError("uncertainty must be nonnegative");
    }
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point) {
                ++fraction_digits;
            }
        } else {
            throw DomainError("malformed decimal '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) {
        throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    // cpp_int reads a leading 0 as an octal prefix.
    const auto first = digits.find_first_not_of('0');
    BigInt significand(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) {
        significand = -significand;
    }
    return Decimal{std::string(text), Rational(significand, pow10(fraction_digits)), uncertainty};
}

Decimal Decimal::parse_rounded(std::string_view text) {
    const auto point = text.find('.');
    const std::size_t places = point == std::string_view::npos ? 0 : text.size() - point - 1;
    return parse(text, Rational(BigInt(1), 2 * pow10(places)));
}

Decimal delta_constant(unsigned digits) {
    if (digits < 1 || digits > delta_max_digits) {
        throw DomainError("delta is available to between 1 and " + std::to_string(delta_max_digits) +
                          " decimal places");
    }
    using Float = boost::multiprecision::cpp_dec_float_50;
    const Float gamma(std::string{euler_gamma_text});
    const Float delta = exp(-exp(-gamma));

    // Round half up at the requested place.
    const Float scaled = floor(delta * Float(pow10(digits).str()) + Float(0.5));
    std::string integral = scaled.str(0, std::ios_base::fixed);
    integral = integral.substr(0, integral.find('.'));
    const BigInt units(integral);
    std::string body = units.str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");

    // One unit in the last place covers the rounding (half a unit) and the
    // effect of the 22-digit gamma (below 1e-22).
    return Decimal{body, Rational(units, pow10(digits)), Rational(BigInt(1), pow10(digits))};
}

ConvergentExpansion continued_fraction_convergents(const Decimal& x, std::uint64_t max_q) {
    if (!(x.value > 0 && x.value < 1)) {
        throw DomainError("continued-fraction input must lie strictly between 0 and 1");
    }
    if (max_q < 1) {
        throw DomainError("max_q must be positive");
    }
    ConvergentExpansion out;
    Rational lo = x.value - x.uncertainty;
    Rational hi = x.value + x.uncertainty;
    BigInt p_prev = 1, q_prev = 0;
    BigInt p_prev2 = 0, q_prev2 = 1;
    const BigInt limit(max_q);
    while (true) {
        const BigInt a = floor_of(lo);
        if (a != floor_of(hi)) {
            out.truncated = true;
            break;
        }
        const BigInt p = a * p_prev + p_prev2;
        const BigInt q = a * q_prev + q_prev2;
        if (q > limit) {
            out.next_denominator = q;
            break;
        }
        out.convergents.push_back(Convergent{p, q});
        out.partial_quotients.push_back(a);
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;

        const Rational lo_rest = lo - a;
        const Rational hi_rest = hi - a;
        if (lo_rest == 0 && hi_rest == 0) {
            break;  // exact rational, expansion complete
        }
        if (lo_rest == 0 || hi_rest == 0) {
            // The interval reaches the convergent itself: the expansion may end here or continue.
            out.truncated = true;
            break;
        }
        lo = 1 / hi_rest;
        hi = 1 / lo_rest;
    }
    return out;
}

} // namespace taxdist
