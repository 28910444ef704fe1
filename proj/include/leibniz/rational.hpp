#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "leibniz/errors.hpp"

namespace leibniz {

using BigInt = mpz_class;
/// Big rational kept in lowest terms with a positive denominator (GMP canonical form).
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw ParseError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace detail {

inline bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Parses "p", "-p", "+p", "p/q" with q > 0. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num_part = s.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!detail::is_digit_run(num_part) || !detail::is_digit_run(den_part))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    BigInt num(std::string(num_part), 10);
    BigInt den(std::string(den_part), 10);
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return make_rational(num, den);
}

/// x^k for integer k (negative k inverts; 0^k for k < 0 is a domain error).
inline Rational pow(const Rational& x, long k) {
    if (k < 0) {
        if (is_zero(x)) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / x, -k);
    }
    Rational result(1);
    Rational base = x;
    auto e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1UL) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

/// Exact rational square root when one exists.
inline bool rational_sqrt(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t()))
        return false;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    root = make_rational(n, d);
    return true;
}

}  // namespace leibniz

#endif  // LEIBNIZ_RATIONAL_HPP
