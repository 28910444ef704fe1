#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

TEST_CASE("make_rational canonicalizes and parse_rational rejects bad input") {
    CHECK(make_rational(4, 6) == make_rational(2, 3));
    CHECK(to_string(make_rational(-4, 2)) == "-2");
    CHECK(to_string(make_rational(3, -9)) == "-1/3");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("quadratic numbers multiply and normalize exactly") {
    const QuadraticNumber r3(Rational(0), Rational(1), 3);
    CHECK(r3 * r3 == QuadraticNumber(3));
    CHECK((r3 * r3).is_rational());
    CHECK(QuadraticNumber(1) / r3 == QuadraticNumber(Rational(0), make_rational(1, 3), 3));
    CHECK_THROWS_AS(r3 + QuadraticNumber(Rational(0), Rational(1), 2), FieldMismatchError);
}

TEST_CASE("conjugate product equals the norm a^2 - d b^2") {
    std::mt19937 rng(11);
    for (std::int64_t d : {2, 3, 5, 6, 7}) {
        for (int trial = 0; trial < 25; ++trial) {
            const Rational a = small_rational(rng, 9), b = nonzero_rational(rng, 9);
            const QuadraticNumber x(a, b, d), xbar(a, Rational(-b), d);
            const QuadraticNumber prod = x * xbar;
            REQUIRE(prod.is_rational());
            CHECK(prod.rational_part() == a * a - Rational(d) * b * b);
            CHECK(x.norm() == prod.rational_part());
        }
    }
}

TEST_CASE("nullspace of small fixed matrices") {
    CHECK(nullspace_basis(Matrix<Rational>::identity(2)).empty());
    const auto k = nullspace_basis(Matrix<Rational>::from_rows({{1, 1}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector<Rational>{-1, 1});
    CHECK(rank(Matrix<Rational>::from_rows({{1, 1}}, 2)) == 1);
}

TEST_CASE("rank-nullity and agreement with dense Gauss-Jordan on random matrices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> sz(1, 7);
        const std::size_t r = sz(rng), c = sz(rng);
        auto m = random_matrix(rng, r, c, 2);
        // force some rank deficiency
        if (r > 1 && trial % 2) for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(3);
        const auto kernel = nullspace_basis(m);
        const std::size_t rk = rank(m);
        CHECK(rk + kernel.size() == c);
        CHECK(rk == oracle::rank(to_dense(m)));
        for (const auto& v : kernel) {
            Vector<Rational> out(r, Rational(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) out[i] += m(i, j) * v[j];
            CHECK(is_zero_vector<Rational>(out));
        }
        const auto dense_kernel = oracle::kernel(to_dense(m), c);
        REQUIRE(dense_kernel.size() == kernel.size());
        for (std::size_t i = 0; i < kernel.size(); ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(kernel[i][j] == dense_kernel[i][j]);
    }
}

TEST_CASE("determinant and inverse against the dense oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto m = random_matrix(rng, n, n, 3);
        const Rational det = determinant(m);
        CHECK(det == oracle::determinant(to_dense(m)));
        if (is_zero(det)) {
            CHECK_THROWS_AS(inverse(m), SingularMatrixError);
        } else {
            CHECK(m * inverse(m) == Matrix<Rational>::identity(n));
        }
    }
    CHECK(inverse(Matrix<Rational>::identity(4)) == Matrix<Rational>::identity(4));
    CHECK_THROWS_AS(determinant(Matrix<Rational>(2, 3)), ShapeError);
}

TEST_CASE("elimination over a quadratic field") {
    using Q = QuadraticNumber;
    const Q s(Rational(0), Rational(1), 2);
    // rows (1, sqrt2) and (sqrt2, 2) are dependent
    Matrix<Q> m(2, 2);
    m(0, 0) = Q(1);
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = Q(2);
    CHECK(rank(m) == 1);
    CHECK(is_zero(determinant(m)));
    const auto k = nullspace_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][1] == Q(1));
    CHECK(k[0][0] == Q(Rational(0), Rational(-1), 2));
}

TEST_CASE("mixing two quadratic fields in one matrix is rejected") {
    using Q = QuadraticNumber;
    Matrix<Q> m(1, 2);
    m(0, 0) = Q(Rational(0), Rational(1), 2);
    m(0, 1) = Q(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(rank(m), FieldMismatchError);
}

TEST_CASE("solve_affine finds a solution or reports inconsistency") {
    const auto a = Matrix<Rational>::from_rows({{1, 2}, {2, 4}}, 2);
    const Vector<Rational> good{3, 6}, bad{3, 7};
    const auto x = solve_affine(a, std::span<const Rational>(good));
    REQUIRE(x);
    CHECK((*x)[0] + Rational(2) * (*x)[1] == Rational(3));
    CHECK_FALSE(solve_affine(a, std::span<const Rational>(bad)));
}

TEST_CASE("nilpotency of single matrices") {
    auto jordan = Matrix<Rational>(3, 3);
    jordan(0, 1) = 1;
    jordan(1, 2) = 1;
    CHECK(is_nilpotent_matrix(jordan));
    CHECK_FALSE(is_nilpotent_matrix(Matrix<Rational>::identity(3)));
    const Vector<Rational> diag{1, 2, 3, 4, 5, 6};
    CHECK_FALSE(is_nilpotent_matrix(Matrix<Rational>::diagonal(diag)));
    CHECK_THROWS_AS(is_nilpotent_matrix(Matrix<Rational>(2, 3)), ShapeError);
}

TEST_CASE("nilpotency matches rank of the n-th power on random matrices") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Matrix<Rational> m = random_matrix(rng, n, n, 2);
        if (trial % 2)  // strictly upper triangular half the time
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j) m(i, j) = 0;
        CHECK(is_nilpotent_matrix(m) == (rank(matpow(m, n)) == 0));
        CHECK(is_nilpotent_matrix(m) == oracle::nilpotent(to_dense(m)));
    }
}

TEST_CASE("Engel test on matrix spans") {
    auto jordan = Matrix<Rational>(3, 3);
    jordan(0, 1) = 1;
    jordan(1, 2) = 1;
    CHECK(engel_all_nilpotent<Rational>({jordan}));
    CHECK_FALSE(engel_all_nilpotent<Rational>({Matrix<Rational>::identity(3)}));

    std::vector<Matrix<Rational>> upper;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            Matrix<Rational> e(4, 4);
            e(i, j) = 1;
            upper.push_back(e);
        }
    CHECK(upper.size() == 6);
    CHECK(engel_all_nilpotent(upper));

    // E_01 and E_10 are each nilpotent but their sum is not.
    Matrix<Rational> e01(2, 2), e10(2, 2);
    e01(0, 1) = 1;
    e10(1, 0) = 1;
    CHECK_FALSE(engel_all_nilpotent<Rational>({e01, e10}));
    CHECK_THROWS_AS(engel_all_nilpotent<Rational>({Matrix<Rational>(2, 2), Matrix<Rational>(3, 3)}), ShapeError);
}

TEST_CASE("a nilpotent Engel verdict covers random combinations") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        // conjugates of strictly upper triangular matrices by one invertible P
        const std::size_t n = 4;
        Matrix<Rational> p;
        do p = random_matrix(rng, n, n, 2);
        while (is_zero(determinant(p)));
        const auto pinv = inverse(p);
        std::vector<Matrix<Rational>> basis;
        for (int b = 0; b < 3; ++b) {
            auto u = random_matrix(rng, n, n, 3);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j) u(i, j) = 0;
            basis.push_back(p * u * pinv);
        }
        REQUIRE(engel_all_nilpotent(basis));
        for (const auto& m : basis) CHECK(is_nilpotent_matrix(m));
        std::uniform_int_distribution<int> coeff(-5, 5);
        for (int c = 0; c < 20; ++c) {
            Matrix<Rational> sum(n, n);
            for (const auto& m : basis) sum += m * Rational(coeff(rng));
            CHECK(is_nilpotent_matrix(sum));
        }
    }
}
