#ifndef LEIBNIZ_ISOMORPHISM_HPP
#define LEIBNIZ_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/families.hpp"

namespace leibniz {

template <ExactField F>
struct BasisChangeF1 {
    F A{1};
    F B{0};
};

template <ExactField F>
struct BasisChangeF2 {
    F A{1};
    F B{0};
    F D{1};
};

template <ExactField F>
struct BasisChangeF3 {
    F A0{1};
    F A1{0};
    F B1{1};
};

namespace detail {

template <ExactField F>
F power(const F& x, int k) {
    F r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

/// Multi-index term of the transform sums, m >= 2: over nondecreasing
/// i_1 <= ... <= i_{m-1} in [k+m, t] of
/// c_{t+3-i_{m-1}} * prod_{r=m-1}^{2} c_{i_r+3-i_{r-1}} * c_{i_1+3-m-k}.
template <ExactField F, class Coeff>
F nested_term(const Coeff& c, int k, int t, int m) {
    const int depth = m - 1;
    const int lo = k + m;
    if (lo > t) return F(0);
    std::vector<int> idx(depth, lo);
    F total(0);
    while (true) {
        F prod = c(t + 3 - idx[depth - 1]);
        for (int r = depth - 1; r >= 1 && !is_zero(prod); --r) prod *= c(idx[r] + 3 - idx[r - 1]);
        if (!is_zero(prod)) prod *= c(idx[0] + 3 - m - k);
        total += prod;
        // Next nondecreasing sequence.
        int pos = depth - 1;
        while (pos >= 0 && idx[pos] == t) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int r = pos + 1; r < depth; ++r) idx[r] = idx[pos];
    }
    return total;
}

/// S_k(t) = sum_{m=1}^{k-1} binom(k-1, m) A^{k-1-m} B^m T_m with
/// T_1 = c_{t+2-k}.
template <ExactField F, class Coeff>
F correction(const Coeff& c, int k, int t, const F& a, const F& b) {
    F s(0);
    for (int m = 1; m <= k - 1; ++m) {
        const F tm = m == 1 ? c(t + 2 - k) : nested_term<F>(c, k, t, m);
        if (is_zero(tm)) continue;
        s += F(Rational(binomial(k - 1, m))) * power(a, k - 1 - m) * power(b, m) * tm;
    }
    return s;
}

}  // namespace detail

/// Parameters of the F1 algebra obtained by the change (A, B).
template <ExactField F>
F1Params<F> transform_f1(const F1Params<F>& p, const BasisChangeF1<F>& ch) {
    p.validate();
    if (is_zero(F(ch.A * (ch.A + ch.B)))) throw ConstraintViolation("F1 change needs A(A+B) != 0");
    const int n = p.n;
    const F& a = ch.A;
    const F& b = ch.B;
    const auto alpha = [&p](int k) { return p.a(k); };
    F1Params<F> q = F1Params<F>::zero(n);
    q.alpha[3] = F((a + b) * p.a(3) / (a * a));
    for (int t = 4; t <= n; ++t) {
        F acc = F((a + b) * p.a(t));
        for (int k = 3; k < t; ++k) acc -= detail::correction<F>(alpha, k, t, a, b) * q.alpha[k];
        q.alpha[t] = F(acc / detail::power(a, t - 1));
    }
    F acc = F(a * p.theta + b * p.a(n));
    for (int k = 3; k < n; ++k) acc -= detail::correction<F>(alpha, k, n, a, b) * q.alpha[k];
    q.theta = F(acc / detail::power(a, n - 1));
    return q;
}

/// Parameters of the F2 algebra obtained by the change (A, B, D).
template <ExactField F>
F2Params<F> transform_f2(const F2Params<F>& p, const BasisChangeF2<F>& ch) {
    p.validate();
    if (is_zero(F(ch.A * ch.D))) throw ConstraintViolation("F2 change needs AD != 0");
    const int n = p.n;
    const F& a = ch.A;
    const F& b = ch.B;
    const F& d = ch.D;
    const auto beta = [&p](int k) { return p.b(k); };
    F2Params<F> q = F2Params<F>::zero(n);
    q.gamma = F(d * d * p.gamma / detail::power(a, n));
    q.beta[3] = F(d * p.b(3) / (a * a));
    for (int t = 4; t <= n; ++t) {
        F acc = F(d * p.b(t));
        for (int k = 3; k < t; ++k) acc -= detail::correction<F>(beta, k, t, a, b) * q.beta[k];
        q.beta[t] = F(acc / detail::power(a, t - 1));
    }
    // beta'_n also picks up B D gamma / A^n (for n = 3 this is beta'_3).
    F acc = F(d * p.b(n));
    for (int k = 3; k < n; ++k) acc -= detail::correction<F>(beta, k, n, a, b) * q.beta[k];
    q.beta[n] = F(b * d * p.gamma / detail::power(a, n) + acc / detail::power(a, n - 1));
    return q;
}

template <ExactField F>
F3Params<F> transform_f3(const F3Params<F>& p, const BasisChangeF3<F>& ch) {
    p.validate();
    if (is_zero(ch.A0) || is_zero(ch.B1)) throw ConstraintViolation("F3 change needs A0 != 0 and B1 != 0");
    const F an1 = detail::power(ch.A0, p.n - 1);
    F3Params<F> q = p;
    q.theta1 = F((ch.A0 * ch.A0 * p.theta1 + ch.A0 * ch.A1 * p.theta2 + ch.A1 * ch.A1 * p.theta3) / (an1 * ch.B1));
    q.theta2 = F((ch.A0 * p.theta2 + F(2) * ch.A1 * p.theta3) / an1);
    q.theta3 = F(ch.B1 * p.theta3 / an1);
    return q;
}

/// How e_2 is generated in the source algebra: [e_0,e_0] (families 1, 2)
/// or [e_1,e_0] (family 3).
enum class GeneratorConvention { e0e0, e1e0 };

inline GeneratorConvention convention_for_family(int family) {
    switch (family) {
        case 1:
        case 2: return GeneratorConvention::e0e0;
        case 3: return GeneratorConvention::e1e0;
    }
    throw std::invalid_argument("family must be 1, 2 or 3");
}

/// Images phi(e_0..e_{dim-1}) as rows, from phi(e_0) = v0, phi(e_1) = v1.
template <ExactField F>
Matrix<F> generator_images(const Algebra<F>& dst, const Vector<F>& v0, const Vector<F>& v1, GeneratorConvention conv) {
    const std::size_t n = dst.dim();
    if (v0.size() != n || v1.size() != n) throw ShapeError("generator images have the wrong length");
    std::vector<Vector<F>> rows{v0, v1};
    if (n > 2) rows.push_back(conv == GeneratorConvention::e0e0 ? bracket<F>(dst, v0, v0) : bracket<F>(dst, v1, v0));
    while (rows.size() < n) rows.push_back(bracket<F>(dst, rows.back(), v0));
    rows.resize(n);
    return Matrix<F>::from_rows(rows, n);
}

/// phi([e_i,e_j]) - [phi(e_i), phi(e_j)] over all basis pairs, flattened.
template <ExactField F>
Vector<F> homomorphism_residual(const Algebra<F>& src, const Algebra<F>& dst, const Matrix<F>& phi) {
    const std::size_t n = src.dim();
    Vector<F> out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector<F> lhs(n, F(0));
            for (const auto& [k, c] : src.product(i, j))
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(phi(k, m))) lhs[m] += c * phi(k, m);
            const Vector<F> rhs = bracket<F>(dst, phi.row(i), phi.row(j));
            for (std::size_t m = 0; m < n; ++m) out.push_back(F(lhs[m] - rhs[m]));
        }
    return out;
}

template <ExactField F>
bool is_isomorphism(const Algebra<F>& src, const Algebra<F>& dst, const Matrix<F>& phi) {
    if (src.dim() != dst.dim() || phi.rows() != src.dim() || phi.cols() != src.dim()) return false;
    if (rank(phi) != phi.rows()) return false;
    return is_zero_vector<F>(homomorphism_residual(src, dst, phi));
}

/// The map fixed by the generator images, if it is an isomorphism src -> dst.
/// Matrix row i holds phi(e_i).
template <ExactField F>
std::optional<Matrix<F>> extend_generators(const Algebra<F>& src, const Algebra<F>& dst, const Vector<F>& v0,
                                           const Vector<F>& v1, GeneratorConvention conv) {
    if (src.dim() != dst.dim()) throw ShapeError("extend_generators: algebras differ in dimension");
    if (!(src.field() == dst.field())) throw FieldMismatchError("extend_generators: algebras live over different fields");
    const Matrix<F> phi = generator_images(dst, v0, v1, conv);
    if (!is_isomorphism(src, dst, phi)) return std::nullopt;
    return phi;
}

template <ExactField F>
struct IsoVerification {
    bool ok = false;
    /// Isomorphism from the original algebra to the transformed one (row i = phi(e_i)).
    std::optional<Matrix<F>> phi;
};

namespace detail {

/// Searches v0 = lead0 + sum_{k>=2} x_k e_k, v1 = lead1 + sum_{k>=2} y_k e_k
/// making src -> dst an isomorphism. For the family tables the conditions are
/// affine in (x, y), so one exact linear solve settles it; the candidate is
/// always re-checked in full.
template <ExactField F>
std::optional<Matrix<F>> solve_generator_images(const Algebra<F>& src, const Algebra<F>& dst, const Vector<F>& lead0,
                                                const Vector<F>& lead1, GeneratorConvention conv) {
    const std::size_t n = dst.dim();
    const std::size_t tail = n > 2 ? n - 2 : 0;
    const std::size_t unknowns = 2 * tail;
    auto images = [&](const Vector<F>& u) {
        Vector<F> v0 = lead0, v1 = lead1;
        for (std::size_t k = 0; k < tail; ++k) {
            v0[k + 2] += u[k];
            v1[k + 2] += u[tail + k];
        }
        return std::pair{v0, v1};
    };
    auto attempt = [&](const Vector<F>& u) -> std::optional<Matrix<F>> {
        const auto [v0, v1] = images(u);
        return extend_generators(src, dst, v0, v1, conv);
    };

    const Vector<F> zero(unknowns, F(0));
    if (auto phi = attempt(zero)) return phi;
    if (unknowns == 0) return std::nullopt;

    auto residual = [&](const Vector<F>& u) {
        const auto [v0, v1] = images(u);
        return homomorphism_residual(src, dst, generator_images(dst, v0, v1, conv));
    };
    const Vector<F> r0 = residual(zero);
    Matrix<F> m(r0.size(), unknowns);
    for (std::size_t q = 0; q < unknowns; ++q) {
        Vector<F> u = zero;
        u[q] = F(1);
        const Vector<F> rq = residual(u);
        for (std::size_t t = 0; t < r0.size(); ++t) m(t, q) = F(rq[t] - r0[t]);
    }
    Vector<F> rhs(r0.size());
    for (std::size_t t = 0; t < r0.size(); ++t) rhs[t] = F(-r0[t]);
    const auto u = solve_affine<F>(m, rhs);
    if (!u) return std::nullopt;
    return attempt(*u);
}

template <ExactField F>
IsoVerification<F> finish(std::optional<Matrix<F>> found) {
    IsoVerification<F> out;
    if (!found) return out;
    out.ok = true;
    out.phi = inverse(*found);
    return out;
}

}  // namespace detail

/// Builds build_f1(transform_f1(p, c)) and looks for an isomorphism from it
/// onto build_f1(p) with v0 = A e_0 + B e_1 + ..., v1 = (A+B) e_1 + ...
template <ExactField F>
IsoVerification<F> verify_criterion_f1(const F1Params<F>& p, const BasisChangeF1<F>& c) {
    const F1Params<F> q = transform_f1(p, c);
    const Algebra<F> dst = build_f1(p);
    const Algebra<F> src = build_f1(q);
    const std::size_t n = dst.dim();
    Vector<F> lead0(n, F(0)), lead1(n, F(0));
    lead0[0] = c.A;
    lead0[1] = c.B;
    lead1[1] = F(c.A + c.B);
    return detail::finish(detail::solve_generator_images(src, dst, lead0, lead1, GeneratorConvention::e0e0));
}

/// As for F1, with v1 = D e_1 + ...
template <ExactField F>
IsoVerification<F> verify_criterion_f2(const F2Params<F>& p, const BasisChangeF2<F>& c) {
    const F2Params<F> q = transform_f2(p, c);
    const Algebra<F> dst = build_f2(p);
    const Algebra<F> src = build_f2(q);
    const std::size_t n = dst.dim();
    Vector<F> lead0(n, F(0)), lead1(n, F(0));
    lead0[0] = c.A;
    lead0[1] = c.B;
    lead1[1] = c.D;
    return detail::finish(detail::solve_generator_images(src, dst, lead0, lead1, GeneratorConvention::e0e0));
}

/// v0 = A0 e_0 + A1 e_1 + ..., v1 = B1 e_1 + ...
template <ExactField F>
IsoVerification<F> verify_criterion_f3(const F3Params<F>& p, const BasisChangeF3<F>& c) {
    const F3Params<F> q = transform_f3(p, c);
    const Algebra<F> dst = build_f3(p);
    const Algebra<F> src = build_f3(q);
    const std::size_t n = dst.dim();
    Vector<F> lead0(n, F(0)), lead1(n, F(0));
    lead0[0] = c.A0;
    lead0[1] = c.A1;
    lead1[1] = c.B1;
    return detail::finish(detail::solve_generator_images(src, dst, lead0, lead1, GeneratorConvention::e1e0));
}

}  // namespace leibniz

#endif  // LEIBNIZ_ISOMORPHISM_HPP
