#ifndef LEIBNIZ_FAMILIES_HPP
#define LEIBNIZ_FAMILIES_HPP

#include <map>
#include <string>

#include "leibniz/algebra.hpp"

namespace leibniz {

namespace detail {

template <ExactField F>
void validate_coefficients(const std::map<int, F>& coeffs, int n, const char* name) {
    if (n < 3) throw ConstraintViolation("family parameter n must be at least 3");
    for (int k = 3; k <= n; ++k)
        if (!coeffs.contains(k)) throw ConstraintViolation(std::string(name) + "_" + std::to_string(k) + " is missing");
    if (coeffs.size() != static_cast<std::size_t>(n - 2))
        throw ConstraintViolation(std::string(name) + " has indices outside 3.." + std::to_string(n));
}

template <ExactField F>
F coefficient_or_zero(const std::map<int, F>& coeffs, int k) {
    const auto it = coeffs.find(k);
    return it == coeffs.end() ? F(0) : it->second;
}

template <ExactField F>
std::map<int, F> zero_coefficients(int n) {
    std::map<int, F> m;
    for (int k = 3; k <= n; ++k) m.emplace(k, F(0));
    return m;
}

template <ExactField F>
FieldDescriptor field_of_values(std::initializer_list<const std::map<int, F>*> maps, std::initializer_list<F> scalars) {
    std::int64_t d = 0;
    auto visit = [&d](const F& x) {
        const std::int64_t dx = radicand_of(x);
        if (dx == 0) return;
        if (d != 0 && d != dx) throw FieldMismatchError("parameters mix two quadratic fields");
        d = dx;
    };
    for (const auto* m : maps)
        for (const auto& [k, v] : *m) visit(v);
    for (const F& x : scalars) visit(x);
    return d == 0 ? FieldDescriptor::rational() : FieldDescriptor::quadratic(d);
}

}  // namespace detail

/// F1(alpha_3, ..., alpha_n, theta). alpha holds every index 3..n.
template <ExactField F>
struct F1Params {
    int n = 3;
    std::map<int, F> alpha;
    F theta{0};

    static F1Params zero(int n) { return {n, detail::zero_coefficients<F>(n), F(0)}; }
    /// alpha_k, zero outside 3..n.
    F a(int k) const { return detail::coefficient_or_zero(alpha, k); }
    void validate() const { detail::validate_coefficients(alpha, n, "alpha"); }
    friend bool operator==(const F1Params&, const F1Params&) = default;
};

/// F2(beta_3, ..., beta_n, gamma).
template <ExactField F>
struct F2Params {
    int n = 3;
    std::map<int, F> beta;
    F gamma{0};

    static F2Params zero(int n) { return {n, detail::zero_coefficients<F>(n), F(0)}; }
    F b(int k) const { return detail::coefficient_or_zero(beta, k); }
    void validate() const { detail::validate_coefficients(beta, n, "beta"); }
    friend bool operator==(const F2Params&, const F2Params&) = default;
};

/// Reduced third family F3(theta_1, theta_2, theta_3) with the alpha flag
/// (only allowed for odd n).
template <ExactField F>
struct F3Params {
    int n = 3;
    F theta1{0};
    F theta2{0};
    F theta3{0};
    int alpha_flag = 0;

    void validate() const {
        if (n < 3) throw ConstraintViolation("family parameter n must be at least 3");
        if (alpha_flag != 0 && alpha_flag != 1) throw ConstraintViolation("alpha_flag must be 0 or 1");
        if (alpha_flag == 1 && n % 2 == 0) throw LeibnizViolation("alpha_flag = 1 is not a Leibniz algebra for even n");
    }
    friend bool operator==(const F3Params&, const F3Params&) = default;
};

template <ExactField F>
Algebra<F> build_f1(const F1Params<F>& p) {
    p.validate();
    const int n = p.n;
    Algebra<F> l(n + 1, detail::field_of_values<F>({&p.alpha}, {p.theta}));
    l.set(0, 0, 2, F(1));
    for (int i = 1; i <= n - 1; ++i) l.set(i, 0, i + 1, F(1));
    for (int k = 3; k <= n - 1; ++k) l.set(0, 1, k, p.a(k));
    l.set(0, 1, n, p.theta);
    for (int i = 1; i <= n - 2; ++i)
        for (int k = i + 2; k <= n; ++k) l.set(i, 1, k, p.a(k + 1 - i));
    return l;
}

template <ExactField F>
Algebra<F> build_f2(const F2Params<F>& p) {
    p.validate();
    const int n = p.n;
    Algebra<F> l(n + 1, detail::field_of_values<F>({&p.beta}, {p.gamma}));
    l.set(0, 0, 2, F(1));
    for (int i = 2; i <= n - 1; ++i) l.set(i, 0, i + 1, F(1));
    for (int k = 3; k <= n; ++k) l.set(0, 1, k, p.b(k));
    l.set(1, 1, n, p.gamma);
    for (int i = 2; i <= n - 2; ++i)
        for (int k = i + 2; k <= n; ++k) l.set(i, 1, k, p.b(k + 1 - i));
    return l;
}

/// Throws LeibnizViolation if the result fails the identity.
template <ExactField F>
Algebra<F> build_f3(const F3Params<F>& p) {
    p.validate();
    const int n = p.n;
    Algebra<F> l(n + 1, detail::field_of_values<F>({}, {p.theta1, p.theta2, p.theta3}));
    for (int i = 1; i <= n - 1; ++i) l.set(i, 0, i + 1, F(1));
    for (int i = 2; i <= n - 1; ++i) l.set(0, i, i + 1, F(-1));
    l.add(0, 0, n, p.theta1);
    l.set(0, 1, 2, F(-1));
    l.add(0, 1, n, p.theta2);
    l.add(1, 1, n, p.theta3);
    if (p.alpha_flag)
        for (int i = 1; i <= n - 1; ++i) l.add(i, n - i, n, F(i % 2 ? -1 : 1));
    const auto report = check_leibniz(l);
    if (!report.ok)
        throw LeibnizViolation("F3 table fails the Leibniz identity at (" + std::to_string(report.triple[0]) + "," +
                               std::to_string(report.triple[1]) + "," + std::to_string(report.triple[2]) + ")");
    return l;
}

template <ExactField F>
Algebra<F> build_algebra(const F1Params<F>& p) {
    return build_f1(p);
}
template <ExactField F>
Algebra<F> build_algebra(const F2Params<F>& p) {
    return build_f2(p);
}
template <ExactField F>
Algebra<F> build_algebra(const F3Params<F>& p) {
    return build_f3(p);
}

/// The 6-dimensional filiform example, entered from its multiplication table.
inline Algebra<Rational> build_example_algebra() {
    Algebra<Rational> l(6);
    l.set(0, 0, 2, 1);
    for (int i = 1; i <= 4; ++i) l.set(i, 0, i + 1, 1);
    for (int i : {0, 1}) {
        l.set(i, 1, 3, 1);
        l.set(i, 1, 4, -2);
        l.set(i, 1, 5, 5);
    }
    l.set(2, 1, 4, 1);
    l.set(2, 1, 5, -2);
    l.set(3, 1, 5, 1);
    return l;
}

}  // namespace leibniz

#endif  // LEIBNIZ_FAMILIES_HPP
