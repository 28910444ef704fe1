#ifndef LEIBNIZ_ENGEL_HPP
#define LEIBNIZ_ENGEL_HPP

#include <cstddef>
#include <vector>

#include "leibniz/elimination.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// M^n = 0 for an n x n matrix.
template <ExactField F>
bool is_nilpotent_matrix(const Matrix<F>& m) {
    if (!m.is_square()) throw ShapeError("is_nilpotent_matrix: matrix is not square");
    if (m.rows() == 0) return true;
    return matpow(m, m.rows()).is_zero_matrix();
}

namespace detail {

template <ExactField F>
bool engel_flag(std::vector<Matrix<F>> ops, std::size_t n) {
    while (true) {
        if (n == 0) return true;
        std::erase_if(ops, [](const Matrix<F>& m) { return m.is_zero_matrix(); });
        if (ops.empty()) return true;

        // Common kernel of the operators acting on columns.
        SparseEchelon<F> se(n);
        for (const auto& m : ops)
            for (std::size_t i = 0; i < n; ++i) se.add_dense_row(m.row(i));
        const auto kernel = se.nullspace_basis();
        if (kernel.empty()) return false;
        const std::size_t k = kernel.size();

        // Extend the kernel to a basis of the whole space with unit vectors.
        SparseEchelon<F> span(n);
        std::vector<Vector<F>> cols = kernel;
        for (const auto& v : kernel) span.add_dense_row(v);
        for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
            Vector<F> unit(n, F(0));
            unit[j] = F(1);
            if (span.add_dense_row(unit)) cols.push_back(std::move(unit));
        }
        const Matrix<F> p = Matrix<F>::from_rows(cols, n).transpose();
        const Matrix<F> p_inv = inverse(p);

        // Induced action on the quotient by the kernel: bottom-right block.
        const std::size_t q = n - k;
        std::vector<Matrix<F>> next;
        next.reserve(ops.size());
        for (const auto& m : ops) {
            const Matrix<F> t = matmul(matmul(p_inv, m), p);
            Matrix<F> block(q, q);
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) block(i, j) = t(k + i, k + j);
            next.push_back(std::move(block));
        }
        ops = std::move(next);
        n = q;
    }
}

}  // namespace detail

/// Every element of span(basis) is nilpotent. The span must be closed under
/// commutators (true for a derivation algebra); the decision then follows the
/// common-kernel flag recursion.
template <ExactField F>
bool engel_all_nilpotent(const std::vector<Matrix<F>>& basis) {
    if (basis.empty()) return true;
    const std::size_t n = basis.front().rows();
    for (const auto& m : basis)
        if (!m.is_square() || m.rows() != n) throw ShapeError("engel_all_nilpotent: matrices differ in size");
    return detail::engel_flag(basis, n);
}

}  // namespace leibniz

#endif  // LEIBNIZ_ENGEL_HPP
