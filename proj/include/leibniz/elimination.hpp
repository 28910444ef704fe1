#ifndef LEIBNIZ_ELIMINATION_HPP
#define LEIBNIZ_ELIMINATION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

template <class C>
using SparseRow = std::vector<std::pair<std::size_t, C>>;

namespace detail {

/// Rows of integers kept primitive (content 1, positive lead). Rational input
/// rows are cleared of denominators on entry, so elimination never divides.
struct FractionFreePolicy {
    using Coeff = BigInt;

    static SparseRow<Coeff> import_row(const SparseRow<Rational>& in) {
        BigInt lcm = 1;
        for (const auto& [col, v] : in) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        SparseRow<Coeff> out;
        out.reserve(in.size());
        for (const auto& [col, v] : in) {
            if (is_zero(v)) continue;
            out.emplace_back(col, BigInt(v.get_num() * (lcm / v.get_den())));
        }
        make_primitive(out);
        return out;
    }

    static void make_primitive(SparseRow<Coeff>& row) {
        if (row.empty()) return;
        BigInt g = 0;
        for (const auto& [col, v] : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(row.front().second) < 0) g = -g;
        if (g != 1)
            for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    /// row <- lead(pivot) * row - lead(row) * pivot, then primitive part.
    static SparseRow<Coeff> eliminate(const SparseRow<Coeff>& row, const SparseRow<Coeff>& pivot) {
        const BigInt p = pivot.front().second;
        const BigInt r = row.front().second;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
        const BigInt ps = p / g;
        const BigInt rs = r / g;
        SparseRow<Coeff> out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.emplace_back(row[i].first, BigInt(ps * row[i].second));
                ++i;
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, BigInt(-rs * pivot[j].second));
                ++j;
            } else {
                BigInt v = ps * row[i].second - rs * pivot[j].second;
                if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        make_primitive(out);
        return out;
    }

    static SparseRow<Rational> export_row(const SparseRow<Coeff>& row) {
        SparseRow<Rational> out;
        out.reserve(row.size());
        const BigInt& lead = row.front().second;
        for (const auto& [col, v] : row) out.emplace_back(col, make_rational(v, lead));
        return out;
    }
};

/// Plain Gauss-Jordan over a field; every stored row has lead 1.
template <ExactField F>
struct FieldPolicy {
    using Coeff = F;

    static SparseRow<F> import_row(const SparseRow<F>& in) {
        SparseRow<F> out;
        for (const auto& [col, v] : in)
            if (!is_zero(v)) out.emplace_back(col, v);
        normalize(out);
        return out;
    }

    static void normalize(SparseRow<F>& row) {
        if (row.empty()) return;
        const F lead = row.front().second;
        if (lead == F(1)) return;
        for (auto& [col, v] : row) v = F(v / lead);
    }

    static SparseRow<F> eliminate(const SparseRow<F>& row, const SparseRow<F>& pivot) {
        const F r = row.front().second;
        SparseRow<F> out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i]);
                ++i;
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, F(-(r * pivot[j].second)));
                ++j;
            } else {
                F v = F(row[i].second - r * pivot[j].second);
                if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        normalize(out);
        return out;
    }

    static SparseRow<F> export_row(const SparseRow<F>& row) { return row; }
};

template <ExactField F>
using PolicyFor = std::conditional_t<std::is_same_v<F, Rational>, FractionFreePolicy, FieldPolicy<F>>;

}  // namespace detail

/// Reduced row echelon form: `reduced` holds only the non-zero rows, with
/// pivots (leading ones) at `pivots`, in ascending column order.
template <ExactField F>
struct EchelonForm {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
    friend bool operator==(const EchelonForm&, const EchelonForm&) = default;
};

/// Incremental row reduction over sparse rows. Rows can be streamed in one at
/// a time; only independent rows are kept.
template <ExactField F>
class SparseEchelon {
    using Policy = detail::PolicyFor<F>;
    using Coeff = typename Policy::Coeff;

public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_of_column_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Entries must be sorted by column; zeros are ignored. Returns true when
    /// the row was independent of the rows already present.
    bool add_row(const SparseRow<F>& row) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].first >= cols_) throw ShapeError("sparse row column out of range");
            if (k && row[k - 1].first >= row[k].first) throw ShapeError("sparse row columns must be strictly increasing");
        }
        auto r = Policy::import_row(row);
        while (!r.empty()) {
            const auto& slot = pivot_of_column_[r.front().first];
            if (!slot) {
                pivot_of_column_[r.front().first] = rows_.size();
                rows_.push_back(std::move(r));
                return true;
            }
            r = Policy::eliminate(r, rows_[*slot]);
        }
        return false;
    }

    bool add_dense_row(std::span<const F> row) {
        if (row.size() != cols_) throw ShapeError("dense row length mismatch");
        SparseRow<F> s;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!is_zero(row[j])) s.emplace_back(j, row[j]);
        return add_row(s);
    }

    /// Sparse reduced rows keyed by pivot column, ascending.
    std::vector<SparseRow<F>> reduced_rows() const {
        std::vector<std::size_t> pivot_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_of_column_[c]) pivot_cols.push_back(c);

        std::vector<std::optional<SparseRow<F>>> reduced(cols_);
        // Back-substitute from the rightmost pivot; a reduced row only has
        // entries in its own pivot column and in free columns.
        for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
            SparseRow<F> row = Policy::export_row(rows_[*pivot_of_column_[*it]]);
            SparseRow<F> acc{row.front()};
            std::vector<std::pair<std::size_t, F>> pending;
            for (std::size_t k = 1; k < row.size(); ++k) {
                const std::size_t col = row[k].first;
                if (reduced[col]) pending.push_back(row[k]);
                else acc.push_back(row[k]);
            }
            for (const auto& [col, coeff] : pending) acc = axpy(acc, F(-coeff), *reduced[col], col);
            reduced[*it] = std::move(acc);
        }
        std::vector<SparseRow<F>> out;
        out.reserve(pivot_cols.size());
        for (std::size_t c : pivot_cols) out.push_back(std::move(*reduced[c]));
        return out;
    }

    EchelonForm<F> echelon_form() const {
        const auto rows = reduced_rows();
        EchelonForm<F> ef{Matrix<F>(rows.size(), cols_), {}};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ef.pivots.push_back(rows[i].front().first);
            for (const auto& [col, v] : rows[i]) ef.reduced(i, col) = v;
        }
        return ef;
    }

    /// Kernel basis: one vector per free column, ascending, with that free
    /// variable 1 and the other free variables 0.
    std::vector<Vector<F>> nullspace_basis() const {
        const auto rows = reduced_rows();
        std::vector<bool> is_pivot(cols_, false);
        for (const auto& r : rows) is_pivot[r.front().first] = true;
        std::vector<std::size_t> free_index(cols_, 0);
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) {
                free_index[c] = free_cols.size();
                free_cols.push_back(c);
            }
        std::vector<Vector<F>> basis(free_cols.size(), Vector<F>(cols_, F(0)));
        for (std::size_t k = 0; k < free_cols.size(); ++k) basis[k][free_cols[k]] = F(1);
        for (const auto& r : rows) {
            const std::size_t p = r.front().first;
            for (std::size_t k = 1; k < r.size(); ++k) basis[free_index[r[k].first]][p] = F(-r[k].second);
        }
        return basis;
    }

private:
    /// acc + s * row, where row's entry at `drop_col` cancels acc's (already
    /// removed) entry at that column.
    static SparseRow<F> axpy(const SparseRow<F>& acc, const F& s, const SparseRow<F>& row, std::size_t drop_col) {
        SparseRow<F> out;
        out.reserve(acc.size() + row.size());
        std::size_t i = 0, j = 0;
        while (i < acc.size() || j < row.size()) {
            if (j < row.size() && row[j].first == drop_col) {
                ++j;
                continue;
            }
            if (j == row.size() || (i < acc.size() && acc[i].first < row[j].first)) {
                out.push_back(acc[i++]);
            } else if (i == acc.size() || row[j].first < acc[i].first) {
                out.emplace_back(row[j].first, F(s * row[j].second));
                ++j;
            } else {
                F v = F(acc[i].second + s * row[j].second);
                if (!is_zero(v)) out.emplace_back(acc[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t cols_;
    std::vector<SparseRow<Coeff>> rows_;
    std::vector<std::optional<std::size_t>> pivot_of_column_;
};

namespace detail {

template <ExactField F>
void require_single_field(const Matrix<F>& m) {
    std::int64_t d = 0;
    for (const F& x : m.data()) {
        const std::int64_t dx = radicand_of(x);
        if (dx == 0) continue;
        if (d == 0) d = dx;
        else if (d != dx) throw FieldMismatchError("matrix mixes scalars from different fields");
    }
}

template <ExactField F>
SparseEchelon<F> load(const Matrix<F>& m) {
    require_single_field(m);
    SparseEchelon<F> se(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) se.add_dense_row(m.row(i));
    return se;
}

/// Fraction-free forward elimination of an integer matrix; returns the rank
/// and leaves the last pivot (the determinant for a full-rank square input).
inline std::size_t bareiss_forward(std::vector<std::vector<BigInt>>& a, std::size_t cols, BigInt& last_pivot, int& sign) {
    const std::size_t rows = a.size();
    BigInt prev = 1;
    std::size_t r = 0;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

inline std::vector<std::vector<BigInt>> clear_denominators(const Matrix<Rational>& m) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt lcm = 1;
        for (const Rational& v : m.row(i)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    return a;
}

}  // namespace detail

template <ExactField F>
EchelonForm<F> rref(const Matrix<F>& m) {
    return detail::load(m).echelon_form();
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rational>) {
        auto a = detail::clear_denominators(m);
        BigInt last;
        int sign = 1;
        return detail::bareiss_forward(a, m.cols(), last, sign);
    } else {
        return detail::load(m).rank();
    }
}

/// Kernel of A, normalized as in SparseEchelon::nullspace_basis.
template <ExactField F>
std::vector<Vector<F>> nullspace_basis(const Matrix<F>& a) {
    return detail::load(a).nullspace_basis();
}

template <ExactField F>
F determinant(const Matrix<F>& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return F(1);
    if constexpr (std::is_same_v<F, Rational>) {
        auto a = detail::clear_denominators(m);
        BigInt scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
            BigInt lcm = 1;
            for (const Rational& v : m.row(i)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            scale *= lcm;
        }
        BigInt last;
        int sign = 1;
        if (detail::bareiss_forward(a, n, last, sign) < n) return Rational(0);
        return make_rational(BigInt(sign * last), scale);
    } else {
        Matrix<F> a = m;
        F det(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && is_zero(a(p, c))) ++p;
            if (p == n) return F(0);
            if (p != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
                det = F(-det);
            }
            det = F(det * a(c, c));
            for (std::size_t i = c + 1; i < n; ++i) {
                if (is_zero(a(i, c))) continue;
                const F f = F(a(i, c) / a(c, c));
                for (std::size_t j = c; j < n; ++j) a(i, j) = F(a(i, j) - f * a(c, j));
            }
        }
        return det;
    }
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    const EchelonForm<F> ef = rref(aug);
    if (ef.rank() < n || ef.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
    return inv;
}

/// Some x with A x = b (free variables 0), or nothing if the system is inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve_affine(const Matrix<F>& a, std::span<const F> b) {
    if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const EchelonForm<F> ef = rref(aug);
    Vector<F> x(a.cols(), F(0));
    for (std::size_t i = 0; i < ef.rank(); ++i) {
        if (ef.pivots[i] == a.cols()) return std::nullopt;
        x[ef.pivots[i]] = ef.reduced(i, a.cols());
    }
    return x;
}

}  // namespace leibniz

#endif  // LEIBNIZ_ELIMINATION_HPP
