#ifndef LEIBNIZ_FIELD_HPP
#define LEIBNIZ_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>

#include "leibniz/quadratic.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Exact scalar field usable by every container in the library.
template <class F>
concept ExactField = std::regular<F> && requires(F a, F b, const Rational& q) {
    F(q);
    { F(a + b) };
    { F(a - b) };
    { F(a * b) };
    { F(a / b) };
    { F(-a) };
    { is_zero(a) } -> std::convertible_to<bool>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

/// Which field an algebra lives over: Q, or Q(sqrt(d)) for a single d.
struct FieldDescriptor {
    enum class Kind { rational, quadratic };
    Kind kind = Kind::rational;
    std::int64_t d = 0;

    static FieldDescriptor rational() { return {}; }
    static FieldDescriptor quadratic(std::int64_t radicand) { return {Kind::quadratic, radicand}; }

    bool is_rational() const { return kind == Kind::rational; }
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// The radicand a scalar is tied to, 0 for anything rational.
inline std::int64_t radicand_of(const Rational&) { return 0; }
inline std::int64_t radicand_of(const QuadraticNumber& x) { return x.radicand(); }

/// True when the value can live in the described field.
template <ExactField F>
bool belongs_to(const F& x, const FieldDescriptor& field) {
    const std::int64_t d = radicand_of(x);
    if (d == 0) return true;
    return !field.is_rational() && field.d == d;
}

}  // namespace leibniz

#endif  // LEIBNIZ_FIELD_HPP
