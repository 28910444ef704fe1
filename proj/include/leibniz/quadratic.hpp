#ifndef LEIBNIZ_QUADRATIC_HPP
#define LEIBNIZ_QUADRATIC_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "leibniz/errors.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

inline bool is_square_free(std::int64_t d) {
    if (d < 2) return false;
    for (std::int64_t p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// Splits a positive integer as m = s^2 * d with d square-free.
inline void square_free_part(std::int64_t m, std::int64_t& square_root_factor, std::int64_t& d) {
    if (m <= 0) throw std::invalid_argument("square_free_part expects a positive integer");
    square_root_factor = 1;
    d = 1;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root_factor *= p;
        if (e % 2) d *= p;
    }
    d *= m;
}

/// An element a + b*sqrt(d) of Q(sqrt(d)).
///
/// d = 0 marks a plain rational that has not been tied to a field yet; it
/// adopts the radicand of whatever it is combined with. Two values with
/// different non-zero radicands never mix.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ == 0) {
            if (!is_zero(b_)) throw FieldMismatchError("irrational part without a radicand");
        } else if (!is_square_free(d_)) {
            throw std::invalid_argument("radicand " + std::to_string(d_) + " is not square-free and >= 2");
        }
    }

    /// sqrt(d) itself.
    static QuadraticNumber sqrt_of(std::int64_t d) { return {Rational(0), Rational(1), d}; }

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    std::int64_t radicand() const { return d_; }
    bool is_rational() const { return is_zero(b_); }

    QuadraticNumber conjugate() const { return {a_, -b_, d_, Unchecked{}}; }
    /// a^2 - d b^2
    Rational norm() const { return Rational(a_ * a_ - Rational(d_) * b_ * b_); }

    QuadraticNumber& operator+=(const QuadraticNumber& o) {
        d_ = common_radicand(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticNumber& operator-=(const QuadraticNumber& o) {
        d_ = common_radicand(d_, o.d_);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticNumber& operator*=(const QuadraticNumber& o) {
        d_ = common_radicand(d_, o.d_);
        if (is_zero(b_) && is_zero(o.b_)) {
            a_ *= o.a_;
            return *this;
        }
        Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o) {
        d_ = common_radicand(d_, o.d_);
        if (is_zero(o.b_)) {
            if (is_zero(o.a_)) throw std::domain_error("division by zero");
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        const Rational n = o.norm();
        QuadraticNumber inv(Rational(o.a_ / n), Rational(-o.b_ / n), d_, Unchecked{});
        return *this *= inv;
    }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return {Rational(-x.a_), Rational(-x.b_), x.d_, Unchecked{}}; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        common_radicand(x.d_, y.d_);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend bool is_zero(const QuadraticNumber& x) { return is_zero(x.a_) && is_zero(x.b_); }

    friend std::string to_string(const QuadraticNumber& x) {
        if (x.is_rational()) return to_string(x.a_);
        return to_string(x.a_) + "+(" + to_string(x.b_) + ")*sqrt(" + std::to_string(x.d_) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << to_string(x); }

private:
    struct Unchecked {};
    QuadraticNumber(Rational a, Rational b, std::int64_t d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static std::int64_t common_radicand(std::int64_t d1, std::int64_t d2) {
        if (d1 == 0) return d2;
        if (d2 == 0 || d1 == d2) return d1;
        throw FieldMismatchError("mixing Q(sqrt(" + std::to_string(d1) + ")) with Q(sqrt(" + std::to_string(d2) + "))");
    }

    Rational a_{0};
    Rational b_{0};
    std::int64_t d_ = 0;
};

}  // namespace leibniz

#endif  // LEIBNIZ_QUADRATIC_HPP
