#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <random>

#include "leibniz/leibniz.hpp"
#include "oracle/leibniz_naive.hpp"
#include "oracle/naive_linalg.hpp"

namespace testing_support {

using namespace leibniz;

inline oracle::Tensor to_tensor(const Algebra<Rational>& l) {
    oracle::Tensor t(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
            for (std::size_t k = 0; k < l.dim(); ++k) t.at(i, j, k) = l.c(i, j, k);
    return t;
}

inline oracle::Dense to_dense(const Matrix<Rational>& m) {
    oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
    return d;
}

inline Rational small_rational(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return make_rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937& rng, int range = 3) {
    Rational x;
    do x = small_rational(rng, range);
    while (is_zero(x));
    return x;
}

inline F1Params<Rational> random_f1(std::mt19937& rng, int n) {
    auto p = F1Params<Rational>::zero(n);
    for (int k = 3; k <= n; ++k) p.alpha[k] = small_rational(rng);
    p.theta = small_rational(rng);
    return p;
}

inline F2Params<Rational> random_f2(std::mt19937& rng, int n) {
    auto p = F2Params<Rational>::zero(n);
    for (int k = 3; k <= n; ++k) p.beta[k] = small_rational(rng);
    p.gamma = small_rational(rng);
    return p;
}

inline Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace testing_support

#endif
