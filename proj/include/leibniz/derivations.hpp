#ifndef LEIBNIZ_DERIVATIONS_HPP
#define LEIBNIZ_DERIVATIONS_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/engel.hpp"
#include "leibniz/families.hpp"

namespace leibniz {

enum class DerivationSource { general_solver, f1_template, f2_template };

inline std::string to_string(DerivationSource s) {
    switch (s) {
        case DerivationSource::general_solver: return "general-solver";
        case DerivationSource::f1_template: return "f1-template";
        case DerivationSource::f2_template: return "f2-template";
    }
    return "unknown";
}

/// Matrices use the row convention: entry (i, k) is the coefficient of e_k in d(e_i).
template <ExactField F>
struct DerivationSpace {
    std::size_t dim_algebra = 0;
    std::vector<Matrix<F>> basis;
    DerivationSource source = DerivationSource::general_solver;

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

template <ExactField F>
Vector<F> flatten(const Matrix<F>& m) {
    return m.data();
}

template <ExactField F>
Matrix<F> unflatten(const Vector<F>& v, std::size_t n) {
    return Matrix<F>(n, n, v);
}

}  // namespace detail

/// d([e_i,e_j]) = [d(e_i), e_j] + [e_i, d(e_j)] on every basis pair.
template <ExactField F>
bool is_derivation(const Algebra<F>& l, const Matrix<F>& d) {
    const std::size_t n = l.dim();
    if (d.rows() != n || d.cols() != n) throw ShapeError("is_derivation: matrix size differs from the algebra dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector<F> lhs(n, F(0));
            for (const auto& [k, c] : l.product(i, j))
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(d(k, m))) lhs[m] += c * d(k, m);
            const Vector<F> r1 = bracket<F>(l, d.row(i), unit_vector<F>(n, j));
            const Vector<F> r2 = bracket<F>(l, unit_vector<F>(n, i), d.row(j));
            for (std::size_t m = 0; m < n; ++m)
                if (lhs[m] != F(r1[m] + r2[m])) return false;
        }
    return true;
}

/// Der(L) as the kernel of the dim^3 x dim^2 linear system, unknown d(i,k)
/// at index i*dim + k.
template <ExactField F>
DerivationSpace<F> derivation_space(const Algebra<F>& l) {
    const std::size_t n = l.dim();
    const std::size_t unknowns = n * n;
    SparseEchelon<F> se(unknowns);
    Vector<F> scratch(unknowns, F(0));
    std::vector<std::size_t> touched;
    std::vector<bool> is_touched(unknowns, false);
    auto bump = [&](std::size_t idx, const F& v) {
        if (!is_touched[idx]) {
            is_touched[idx] = true;
            touched.push_back(idx);
        }
        scratch[idx] += v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                // sum_k c_ij^k d(k,m) - sum_k d(i,k) c_kj^m - sum_k d(j,k) c_ik^m = 0
                for (const auto& [k, c] : l.product(i, j)) bump(k * n + m, c);
                for (std::size_t k = 0; k < n; ++k) {
                    const F& ckj = l.c(k, j, m);
                    if (!is_zero(ckj)) bump(i * n + k, F(-ckj));
                    const F& cik = l.c(i, k, m);
                    if (!is_zero(cik)) bump(j * n + k, F(-cik));
                }
                if (touched.empty()) continue;
                std::sort(touched.begin(), touched.end());
                SparseRow<F> row;
                for (std::size_t idx : touched) {
                    if (!is_zero(scratch[idx])) row.emplace_back(idx, scratch[idx]);
                    scratch[idx] = F(0);
                    is_touched[idx] = false;
                }
                touched.clear();
                if (!row.empty()) se.add_row(row);
            }
    DerivationSpace<F> ds{n, {}, DerivationSource::general_solver};
    for (const auto& v : se.nullspace_basis()) ds.basis.push_back(detail::unflatten(v, n));
    return ds;
}

/// Free parameters of an F1 derivation: a_0..a_n, b_{n-1}, b_n.
template <ExactField F>
struct F1DerivationAssignment {
    std::vector<F> a;  // size n+1
    F b_n_minus_1{0};
    F b_n{0};
};

/// Free parameters of an F2 derivation: a_0..a_n, b_1, b_n.
template <ExactField F>
struct F2DerivationAssignment {
    std::vector<F> a;  // size n+1
    F b_1{0};
    F b_n{0};
};

namespace detail {

template <ExactField F, class Coeff>
F quadratic_sum(const Coeff& coeff, int k) {
    F s(0);
    for (int j = 4; j <= k; ++j) s += coeff(j - 1) * coeff(k - j + 3);
    return s;
}

}  // namespace detail

/// Linear constraints on (a_0, a_1) for F1, one row per equation:
/// a_0(theta - alpha_n) = 0, alpha_3(a_1 - a_0) = 0 and, for 4 <= k <= n,
/// alpha_k(a_1 - (k-2)a_0) = (k/2) a_1 sum_{j=4}^{k} alpha_{j-1} alpha_{k-j+3}.
template <ExactField F>
std::vector<std::pair<std::string, std::array<F, 2>>> f1_constraint_rows(const F1Params<F>& p) {
    const int n = p.n;
    std::vector<std::pair<std::string, std::array<F, 2>>> rows;
    rows.push_back({"a0(theta-alpha_n)=0", {F(p.theta - p.a(n)), F(0)}});
    rows.push_back({"alpha_3(a1-a0)=0", {F(-p.a(3)), p.a(3)}});
    for (int k = 4; k <= n; ++k) {
        const F s = detail::quadratic_sum<F>([&p](int t) { return p.a(t); }, k);
        rows.push_back({"alpha_" + std::to_string(k) + "(a1-" + std::to_string(k - 2) + "a0)=(" + std::to_string(k) +
                            "/2)a1*sum",
                        {F(F(-(k - 2)) * p.a(k)), F(p.a(k) - F(make_rational(k, 2)) * s)}});
    }
    return rows;
}

/// Constraints on (a_0, a_1, b_1) for F2:
/// gamma(2b_1 - n a_0) = 0; for 3 <= k <= n-1,
/// beta_k(b_1 - (k-1)a_0) = (k/2) a_1 sum_{j=4}^{k} beta_{j-1} beta_{k-j+3};
/// and beta_n(b_1 - (n-1)a_0) = -a_1 gamma + (n/2) a_1 sum (this form also
/// covers k = 3 when n = 3).
template <ExactField F>
std::vector<std::pair<std::string, std::array<F, 3>>> f2_constraint_rows(const F2Params<F>& p) {
    const int n = p.n;
    std::vector<std::pair<std::string, std::array<F, 3>>> rows;
    rows.push_back({"gamma(2b1-n*a0)=0", {F(F(-n) * p.gamma), F(0), F(F(2) * p.gamma)}});
    for (int k = 3; k <= n; ++k) {
        const F s = detail::quadratic_sum<F>([&p](int t) { return p.b(t); }, k);
        F a1 = F(F(make_rational(-k, 2)) * s);
        std::string name = "beta_" + std::to_string(k) + "(b1-" + std::to_string(k - 1) + "a0)=(" + std::to_string(k) + "/2)a1*sum";
        if (k == n) {
            a1 += p.gamma;
            name += "-a1*gamma";
        }
        rows.push_back({name, {F(F(-(k - 1)) * p.b(k)), a1, p.b(k)}});
    }
    return rows;
}

template <ExactField F>
Matrix<F> f1_derivation_matrix_unchecked(const F1Params<F>& p, const F1DerivationAssignment<F>& asn) {
    const int n = p.n;
    const auto& a = asn.a;
    Matrix<F> d(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) d(0, k) = a[k];
    d(1, 1) = a[0] + a[1];
    for (int k = 2; k <= n - 2; ++k) d(1, k) = a[k];
    d(1, n - 1) = asn.b_n_minus_1;
    d(1, n) = asn.b_n;
    for (int i = 2; i <= n; ++i) {
        d(i, i) = F(i) * a[0] + a[1];
        for (int k = i + 1; k <= n; ++k) d(i, k) = a[k - i + 1] + F(i - 1) * a[1] * p.a(k - i + 2);
    }
    // [e_0,e_1] carries theta, not alpha_n, at e_n.
    d(2, n) = a[n - 1] + a[1] * p.theta;
    return d;
}

/// The parametrized derivation of an F1 algebra; throws ConstraintViolation
/// naming the first equation the assignment breaks.
template <ExactField F>
Matrix<F> f1_derivation_matrix(const F1Params<F>& p, const F1DerivationAssignment<F>& asn) {
    p.validate();
    if (asn.a.size() != static_cast<std::size_t>(p.n + 1)) throw ShapeError("F1 assignment needs a_0..a_n");
    for (const auto& [name, row] : f1_constraint_rows(p))
        if (!is_zero(F(row[0] * asn.a[0] + row[1] * asn.a[1]))) throw ConstraintViolation("violated: " + name);
    if (asn.a[1] * (p.a(p.n) - p.theta) != asn.a[p.n - 1] - asn.b_n_minus_1)
        throw ConstraintViolation("violated: a1(alpha_n-theta)=a_{n-1}-b_{n-1}");
    return f1_derivation_matrix_unchecked(p, asn);
}

template <ExactField F>
Matrix<F> f2_derivation_matrix_unchecked(const F2Params<F>& p, const F2DerivationAssignment<F>& asn) {
    const int n = p.n;
    const auto& a = asn.a;
    Matrix<F> d(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) d(0, k) = a[k];
    d(1, 1) = asn.b_1;
    d(1, n - 1) -= a[1] * p.gamma;
    d(1, n) += asn.b_n;
    for (int i = 2; i <= n; ++i) {
        d(i, i) = F(i) * a[0];
        for (int k = i + 1; k <= n; ++k) d(i, k) = a[k + 1 - i] + F(i - 1) * a[1] * p.b(k + 2 - i);
    }
    return d;
}

template <ExactField F>
Matrix<F> f2_derivation_matrix(const F2Params<F>& p, const F2DerivationAssignment<F>& asn) {
    p.validate();
    if (asn.a.size() != static_cast<std::size_t>(p.n + 1)) throw ShapeError("F2 assignment needs a_0..a_n");
    for (const auto& [name, row] : f2_constraint_rows(p))
        if (!is_zero(F(row[0] * asn.a[0] + row[1] * asn.a[1] + row[2] * asn.b_1)))
            throw ConstraintViolation("violated: " + name);
    return f2_derivation_matrix_unchecked(p, asn);
}

/// Basis of the (a_0, a_1) pairs that extend to an F1 derivation.
template <ExactField F>
std::vector<Vector<F>> f1_constraint_solutions(const F1Params<F>& p) {
    p.validate();
    const auto rows = f1_constraint_rows(p);
    Matrix<F> m(rows.size(), 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = rows[i].second[j];
    return nullspace_basis(m);
}

/// Basis of the (a_0, a_1, b_1) triples that extend to an F2 derivation.
template <ExactField F>
std::vector<Vector<F>> f2_constraint_solutions(const F2Params<F>& p) {
    p.validate();
    const auto rows = f2_constraint_rows(p);
    Matrix<F> m(rows.size(), 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i].second[j];
    return nullspace_basis(m);
}

/// Span of the F1 template over the constraint solutions plus the free
/// parameters a_2..a_n and b_n.
template <ExactField F>
DerivationSpace<F> f1_template_space(const F1Params<F>& p) {
    const int n = p.n;
    DerivationSpace<F> ds{static_cast<std::size_t>(n + 1), {}, DerivationSource::f1_template};
    for (const auto& s : f1_constraint_solutions(p)) {
        F1DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
        asn.a[0] = s[0];
        asn.a[1] = s[1];
        asn.b_n_minus_1 = F(-(s[1] * (p.a(n) - p.theta)));
        ds.basis.push_back(f1_derivation_matrix(p, asn));
    }
    for (int q = 2; q <= n; ++q) {
        F1DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
        asn.a[q] = F(1);
        asn.b_n_minus_1 = asn.a[n - 1];
        ds.basis.push_back(f1_derivation_matrix(p, asn));
    }
    F1DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
    asn.b_n = F(1);
    ds.basis.push_back(f1_derivation_matrix(p, asn));
    return ds;
}

template <ExactField F>
DerivationSpace<F> f2_template_space(const F2Params<F>& p) {
    const int n = p.n;
    DerivationSpace<F> ds{static_cast<std::size_t>(n + 1), {}, DerivationSource::f2_template};
    for (const auto& s : f2_constraint_solutions(p)) {
        F2DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
        asn.a[0] = s[0];
        asn.a[1] = s[1];
        asn.b_1 = s[2];
        ds.basis.push_back(f2_derivation_matrix(p, asn));
    }
    for (int q = 2; q <= n; ++q) {
        F2DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
        asn.a[q] = F(1);
        ds.basis.push_back(f2_derivation_matrix(p, asn));
    }
    F2DerivationAssignment<F> asn{std::vector<F>(n + 1, F(0))};
    asn.b_n = F(1);
    ds.basis.push_back(f2_derivation_matrix(p, asn));
    return ds;
}

/// Reduced echelon form of the flattened span, for comparing two spaces.
template <ExactField F>
EchelonForm<F> span_echelon(const std::vector<Matrix<F>>& mats, std::size_t n) {
    SparseEchelon<F> se(n * n);
    for (const auto& m : mats) se.add_dense_row(std::span<const F>(m.data()));
    return se.echelon_form();
}

template <ExactField F>
struct CharNilpotencyVerdict {
    bool is_char_nilpotent = true;
    std::optional<Matrix<F>> witness;
    std::string method = "engel";
    std::size_t der_dim = 0;
    /// Verdict is negative but the bounded scan found no witness.
    bool witness_search_exhausted = false;
};

struct WitnessScanOptions {
    int range = 3;                       // integer coefficients in [-range, range]
    std::size_t max_combinations = 20000;
    std::optional<unsigned> seed;        // shuffles the basis scan order when set
};

/// Seed from LEIBNIZ_LAB_SEED, if present.
inline std::optional<unsigned> seed_from_environment() {
    const char* s = std::getenv("LEIBNIZ_LAB_SEED");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (*end != '\0') return std::nullopt;
    return static_cast<unsigned>(v);
}

/// Non-nilpotent element of span(basis): basis elements first, then integer
/// combinations over 0, 1, -1, 2, -2, ... in lexicographic order (last
/// coefficient fastest).
template <ExactField F>
std::optional<Matrix<F>> find_non_nilpotent(const std::vector<Matrix<F>>& basis, const WitnessScanOptions& opt = {}) {
    std::vector<std::size_t> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    if (opt.seed) {
        std::mt19937 rng(*opt.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::size_t idx : order)
        if (!is_nilpotent_matrix(basis[idx])) return basis[idx];
    if (basis.empty()) return std::nullopt;

    std::vector<long> values{0};
    for (long v = 1; v <= opt.range; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }
    const std::size_t b = basis.size();
    std::vector<std::size_t> digits(b, 0);
    std::size_t tried = 0;
    const std::size_t n = basis.front().rows();
    while (tried < opt.max_combinations) {
        // Odometer increment, last position fastest.
        std::size_t pos = b;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < values.size()) break;
            digits[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
        std::size_t support = 0;
        for (auto d : digits) support += d != 0;
        if (support < 2) continue;  // basis multiples already tested
        ++tried;
        Matrix<F> m(n, n);
        for (std::size_t q = 0; q < b; ++q)
            if (digits[q]) m += basis[order[q]] * F(Rational(values[digits[q]]));
        if (!is_nilpotent_matrix(m)) return m;
    }
    return std::nullopt;
}

template <ExactField F>
CharNilpotencyVerdict<F> is_characteristically_nilpotent(const Algebra<F>& l, const WitnessScanOptions& opt = {}) {
    const DerivationSpace<F> ds = derivation_space(l);
    CharNilpotencyVerdict<F> v;
    v.der_dim = ds.dim();
    v.method = "engel";
    v.is_char_nilpotent = engel_all_nilpotent(ds.basis);
    if (!v.is_char_nilpotent) {
        v.witness = find_non_nilpotent(ds.basis, opt);
        v.witness_search_exhausted = !v.witness.has_value();
        if (v.witness) {
            // Scale so the first nonzero diagonal entry is 1.
            for (std::size_t i = 0; i < v.witness->rows(); ++i)
                if (!is_zero((*v.witness)(i, i))) {
                    const F s = F(F(1) / (*v.witness)(i, i));
                    *v.witness *= s;
                    break;
                }
        }
    }
    return v;
}

}  // namespace leibniz

#endif  // LEIBNIZ_DERIVATIONS_HPP
