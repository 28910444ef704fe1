#ifndef LEIBNIZ_COMBINATORICS_HPP
#define LEIBNIZ_COMBINATORICS_HPP

#include <stdexcept>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// binom(n, k), multiplicative form.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Generalized binomial binom(x, k) = x(x-1)...(x-k+1)/k! for rational x.
inline Rational binomial(const Rational& x, long k) {
    if (k < 0) throw std::domain_error("binomial with negative lower index");
    Rational r(1);
    for (long i = 0; i < k; ++i) {
        r *= x - Rational(i);
        r /= Rational(i + 1);
    }
    return r;
}

/// p-th Catalan number binom(pn, n) / ((p-1)n + 1).
inline BigInt p_catalan(long p, long n) {
    if (p < 2) throw std::domain_error("p_catalan needs p >= 2");
    if (n < 0) throw std::domain_error("p_catalan needs n >= 0");
    const BigInt num = binomial(p * n, n);
    const BigInt den = (p - 1) * n + 1;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("p_catalan: inexact division");
    return q;
}

inline BigInt catalan(long n) {
    if (n < 0) throw std::domain_error("catalan needs n >= 0");
    return p_catalan(2, n);
}

/// Rothe number A_n(x, z) = x/(x+zn) * binom(x+zn, n).
inline Rational rothe(const Rational& x, const Rational& z, long n) {
    if (n < 0) throw std::domain_error("rothe needs n >= 0");
    const Rational top = x + z * Rational(n);
    if (sgn(top) == 0) throw std::domain_error("rothe: pole at x + zn = 0");
    return Rational(x / top * binomial(top, n));
}

struct IdentityRow {
    long index;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

/// sum_{k=0}^{n} A_k(x,z) A_{n-k}(y,z) against A_n(x+y,z), for 0 <= n <= n_max.
inline std::vector<IdentityRow> convolution_table(const Rational& x, const Rational& y, const Rational& z, long n_max) {
    std::vector<IdentityRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        Rational lhs(0);
        for (long k = 0; k <= n; ++k) lhs += rothe(x, z, k) * rothe(y, z, n - k);
        rows.push_back({n, lhs, rothe(x + y, z, n)});
    }
    return rows;
}

inline bool verify_convolution(const Rational& x, const Rational& y, const Rational& z, long n_max) {
    for (const auto& r : convolution_table(x, y, z, n_max))
        if (!r.holds()) return false;
    return true;
}

/// sum_{k=1}^{t} C^p_k C^p_{t+1-k} against 2t/((p-1)t+p+1) * C^p_{t+1}.
inline std::vector<IdentityRow> catalan_convolution_table(long p, long t_max) {
    std::vector<IdentityRow> rows;
    for (long t = 1; t <= t_max; ++t) {
        BigInt lhs = 0;
        for (long k = 1; k <= t; ++k) lhs += p_catalan(p, k) * p_catalan(p, t + 1 - k);
        const Rational rhs = make_rational(BigInt(2 * t), BigInt((p - 1) * t + p + 1)) * Rational(p_catalan(p, t + 1));
        rows.push_back({t, Rational(lhs), rhs});
    }
    return rows;
}

inline bool verify_catalan_convolution(long p, long t_max) {
    for (const auto& r : catalan_convolution_table(p, t_max))
        if (!r.holds()) return false;
    return true;
}

/// The same identity with the left-hand indices summing to n instead of n+1,
/// i.e. sum_{k=1}^{n} C^p_k C^p_{n-k} against 2n/((p-1)n+p+1) * C^p_{n+1}.
/// Kept only to document that this reading is false.
inline IdentityRow catalan_convolution_literal(long p, long n) {
    BigInt lhs = 0;
    for (long k = 1; k <= n; ++k) lhs += p_catalan(p, k) * p_catalan(p, n - k);
    const Rational rhs = make_rational(BigInt(2 * n), BigInt((p - 1) * n + p + 1)) * Rational(p_catalan(p, n + 1));
    return {n, Rational(lhs), rhs};
}

/// The convolution with A_n (not A_k) as the first factor, likewise false in general.
inline IdentityRow convolution_literal(const Rational& x, const Rational& y, const Rational& z, long n) {
    Rational lhs(0);
    for (long k = 0; k <= n; ++k) lhs += rothe(x, z, n) * rothe(y, z, n - k);
    return {n, lhs, rothe(x + y, z, n)};
}

}  // namespace leibniz

#endif  // LEIBNIZ_COMBINATORICS_HPP
