#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leibniz/elimination.hpp"
#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
template <ExactField F>
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(std::size_t dim, FieldDescriptor field = FieldDescriptor::rational())
        : dim_(dim), field_(field), table_(dim * dim * dim, F(0)), products_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }

    const F& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[index(i, j, k)]; }

    void set(std::size_t i, std::size_t j, std::size_t k, const F& v) {
        check_index(i, j, k);
        if (!belongs_to(v, field_)) throw FieldMismatchError("structure constant " + to_string(v) + " is outside the algebra's field");
        table_[index(i, j, k)] = v;
        rebuild_product(i, j);
    }
    void add(std::size_t i, std::size_t j, std::size_t k, const F& v) {
        check_index(i, j, k);
        set(i, j, k, F(table_[index(i, j, k)] + v));
    }

    /// Nonzero coefficients of [e_i, e_j], ascending in k.
    const SparseRow<F>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

    Vector<F> bracket_basis(std::size_t i, std::size_t j) const {
        Vector<F> out(dim_, F(0));
        for (const auto& [k, v] : product(i, j)) out[k] = v;
        return out;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
    void check_index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw ShapeError("structure constant index out of range");
    }
    void rebuild_product(std::size_t i, std::size_t j) {
        auto& p = products_[i * dim_ + j];
        p.clear();
        for (std::size_t k = 0; k < dim_; ++k)
            if (!is_zero(c(i, j, k))) p.emplace_back(k, c(i, j, k));
    }

    std::size_t dim_ = 0;
    FieldDescriptor field_;
    std::vector<F> table_;
    std::vector<SparseRow<F>> products_;
};

template <ExactField F>
Vector<F> unit_vector(std::size_t dim, std::size_t i) {
    Vector<F> v(dim, F(0));
    v.at(i) = F(1);
    return v;
}

/// Bilinear extension of the table.
template <ExactField F>
Vector<F> bracket(const Algebra<F>& l, std::span<const F> x, std::span<const F> y) {
    const std::size_t n = l.dim();
    if (x.size() != n || y.size() != n) throw ShapeError("bracket: vector length differs from the algebra dimension");
    Vector<F> out(n, F(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            const auto& p = l.product(i, j);
            if (p.empty()) continue;
            const F xy = F(x[i] * y[j]);
            for (const auto& [k, v] : p) out[k] += xy * v;
        }
    }
    return out;
}

template <ExactField F>
struct LeibnizReport {
    bool ok = true;
    std::array<std::size_t, 3> triple{};  // first failing (i, j, k), lexicographic
    Vector<F> residual;                    // [[e_i,e_j],e_k] - [[e_i,e_k],e_j] - [e_i,[e_j,e_k]]
};

namespace detail {

/// [u, e_k] for a sparse u.
template <ExactField F>
void accumulate_right(const Algebra<F>& l, const SparseRow<F>& u, std::size_t k, const F& sign, Vector<F>& out) {
    for (const auto& [m, um] : u)
        for (const auto& [t, v] : l.product(m, k)) out[t] += sign * um * v;
}

/// [e_i, u] for a sparse u.
template <ExactField F>
void accumulate_left(const Algebra<F>& l, std::size_t i, const SparseRow<F>& u, const F& sign, Vector<F>& out) {
    for (const auto& [m, um] : u)
        for (const auto& [t, v] : l.product(i, m)) out[t] += sign * um * v;
}

}  // namespace detail

/// [[x,y],z] = [[x,z],y] + [x,[y,z]] on every basis triple.
template <ExactField F>
LeibnizReport<F> check_leibniz(const Algebra<F>& l) {
    const std::size_t n = l.dim();
    const F one(1), minus_one(-1);
    LeibnizReport<F> report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector<F> r(n, F(0));
                detail::accumulate_right(l, l.product(i, j), k, one, r);
                detail::accumulate_right(l, l.product(i, k), j, minus_one, r);
                detail::accumulate_left(l, i, l.product(j, k), minus_one, r);
                if (!is_zero_vector<F>(r)) {
                    report.ok = false;
                    report.triple = {i, j, k};
                    report.residual = std::move(r);
                    return report;
                }
            }
    return report;
}

/// A subspace stored by its reduced row echelon basis, so equal subspaces
/// compare equal.
template <ExactField F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector<F>>& vectors) {
        SparseEchelon<F> se(ambient);
        for (const auto& v : vectors) se.add_dense_row(v);
        Subspace s(ambient);
        for (const auto& row : se.reduced_rows()) {
            Vector<F> v(ambient, F(0));
            for (const auto& [c, x] : row) v[c] = x;
            s.basis_.push_back(std::move(v));
        }
        return s;
    }

    static Subspace whole(std::size_t ambient) {
        std::vector<Vector<F>> units;
        for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector<F>(ambient, i));
        return span(ambient, units);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector<F>>& basis() const { return basis_; }

    bool contains(std::span<const F> v) const {
        std::vector<Vector<F>> vs = basis_;
        vs.emplace_back(v.begin(), v.end());
        return span(ambient_, vs).dim() == dim();
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    std::vector<Vector<F>> basis_;
};

/// L^1 = L, L^{k+1} = [L^k, L], listed until the series stabilizes (the
/// stable term appears once).
template <ExactField F>
std::vector<Subspace<F>> lower_central_series(const Algebra<F>& l) {
    const std::size_t n = l.dim();
    std::vector<Subspace<F>> series{Subspace<F>::whole(n)};
    while (true) {
        const Subspace<F>& last = series.back();
        std::vector<Vector<F>> products;
        for (const auto& x : last.basis())
            for (std::size_t j = 0; j < n; ++j) {
                auto p = bracket<F>(l, x, unit_vector<F>(n, j));
                if (!is_zero_vector<F>(p)) products.push_back(std::move(p));
            }
        Subspace<F> next = Subspace<F>::span(n, products);
        if (next == last) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

template <ExactField F>
std::vector<std::size_t> series_dimensions(const std::vector<Subspace<F>>& series) {
    std::vector<std::size_t> dims;
    for (const auto& s : series) dims.push_back(s.dim());
    return dims;
}

template <ExactField F>
bool is_nilpotent_algebra(const Algebra<F>& l) {
    return lower_central_series(l).back().dim() == 0;
}

/// dim L^i = dim L - i for 2 <= i <= dim L.
template <ExactField F>
bool is_filiform(const Algebra<F>& l) {
    const std::size_t n = l.dim();
    if (n < 2) return false;
    const auto dims = series_dimensions(lower_central_series(l));
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t d = i <= dims.size() ? dims[i - 1] : dims.back();
        if (d != n - i) return false;
    }
    return true;
}

}  // namespace leibniz

#endif  // LEIBNIZ_ALGEBRA_HPP
