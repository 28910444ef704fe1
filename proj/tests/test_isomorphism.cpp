#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

F1Params<Rational> example_params() {
    auto p = F1Params<Rational>::zero(5);
    p.alpha = {{3, 1}, {4, -2}, {5, 5}};
    p.theta = 5;
    return p;
}

const std::vector<BasisChangeF1<Rational>> f1_grid{
    {1, 0}, {2, 0}, {1, 1}, {3, -1}, {make_rational(-1, 2), make_rational(3, 2)}};

}  // namespace

TEST_CASE("F1 transform") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_f1(rng, 3 + trial % 6);
        CHECK(transform_f1(p, {1, 0}) == p);
    }
    auto p = F1Params<Rational>::zero(5);
    p.theta = 8;
    CHECK(transform_f1(p, {2, 0}).theta == 1);

    auto q = F1Params<Rational>::zero(5);
    q.alpha[3] = 4;
    CHECK(transform_f1(q, {1, make_rational(-3, 4)}).a(3) == 1);
    CHECK_THROWS_AS(transform_f1(q, {1, -1}), ConstraintViolation);
    CHECK_THROWS_AS(transform_f1(q, {0, 1}), ConstraintViolation);
}

TEST_CASE("F2 transform") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_f2(rng, 3 + trial % 6);
        CHECK(transform_f2(p, {1, 0, 1}) == p);
    }
    auto p = F2Params<Rational>::zero(5);
    p.gamma = 4;
    CHECK(transform_f2(p, {1, 0, make_rational(1, 2)}).gamma == 1);
    auto q = F2Params<Rational>::zero(5);
    q.beta[5] = 3;
    q.gamma = 1;
    CHECK(transform_f2(q, {1, -3, 1}).b(5) == 0);
    CHECK_THROWS_AS(transform_f2(q, {1, 0, 0}), ConstraintViolation);
}

TEST_CASE("F3 transform") {
    const F3Params<Rational> p{5, 3, -1, 2, 0};
    CHECK(transform_f3(p, {1, 0, 1}) == p);
    const auto c1 = transform_f3(F3Params<Rational>{5, 4, 0, 0, 0}, {1, 0, 4});
    CHECK(c1.theta1 == 1);
    const auto c3 = transform_f3(F3Params<Rational>{5, 1, 2, 1, 0}, {1, -1, 1});
    CHECK(c3 == F3Params<Rational>{5, 0, 0, 1, 0});
    CHECK_THROWS_AS(transform_f3(p, {0, 1, 1}), ConstraintViolation);
}

TEST_CASE("F3 transform followed by the inverse change is the identity") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 6;
        const F3Params<Rational> p{n, small_rational(rng), small_rational(rng), small_rational(rng), 0};
        const Rational a0 = nonzero_rational(rng), a1 = small_rational(rng), b1 = nonzero_rational(rng);
        const auto q = transform_f3(p, {a0, a1, b1});
        const BasisChangeF3<Rational> inv{1 / a0, -a1 / (a0 * b1), 1 / b1};
        CHECK(transform_f3(q, inv) == p);
    }
}

TEST_CASE("extending generator images") {
    const auto l = build_example_algebra();
    const auto id = extend_generators(l, l, unit_vector<Rational>(6, 0), unit_vector<Rational>(6, 1), GeneratorConvention::e0e0);
    REQUIRE(id);
    CHECK(*id == Matrix<Rational>::identity(6));

    auto p8 = F1Params<Rational>::zero(5), p1 = F1Params<Rational>::zero(5);
    p8.theta = 8;
    p1.theta = 1;
    Vector<Rational> v0(6, Rational(0)), v1(6, Rational(0));
    v0[0] = 2;
    v1[1] = 2;
    const auto phi = extend_generators(build_f1(p1), build_f1(p8), v0, v1, GeneratorConvention::e0e0);
    REQUIRE(phi);
    CHECK(is_isomorphism(build_f1(p1), build_f1(p8), *phi));
    CHECK_FALSE(extend_generators(build_f1(p8), build_f1(p1), v0, v1, GeneratorConvention::e0e0));

    // a characteristically nilpotent table is not isomorphic to the F1^3 representative
    auto cn = example_params();
    cn.theta = 0;
    const auto rep = build_f1(example_params());
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, -1}, {-1, 3}}) {
        Vector<Rational> w0(6, Rational(0)), w1(6, Rational(0));
        w0[0] = a;
        w0[1] = b;
        w1[1] = a + b;
        CHECK_FALSE(extend_generators(build_f1(cn), rep, w0, w1, GeneratorConvention::e0e0));
    }
}

TEST_CASE("F1 criterion end to end") {
    auto check = [](const F1Params<Rational>& p, const BasisChangeF1<Rational>& c) {
        const auto v = verify_criterion_f1(p, c);
        REQUIRE(v.ok);
        REQUIRE(v.phi);
        CHECK(is_isomorphism(build_f1(p), build_f1(transform_f1(p, c)), *v.phi));
    };
    check(example_params(), {1, 1});
    check(f1_representative<Rational>(6, 3), {3, -1});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const auto p = random_f1(rng, 3 + trial);
        for (const auto& c : f1_grid) {
            check(p, c);
            CHECK(classify_f1(transform_f1(p, c)).label == classify_f1(p).label);
        }
    }
}

TEST_CASE("F2 and F3 criteria end to end") {
    std::mt19937 rng(6);
    const std::vector<BasisChangeF2<Rational>> grid{{1, 0, 1}, {2, 1, 3}, {-1, 2, make_rational(1, 2)}};
    for (int trial = 0; trial < 6; ++trial) {
        const auto p = random_f2(rng, 3 + trial);
        for (const auto& c : grid) {
            const auto v = verify_criterion_f2(p, c);
            REQUIRE(v.ok);
            CHECK(is_isomorphism(build_f2(p), build_f2(transform_f2(p, c)), *v.phi));
        }
    }
    const std::vector<BasisChangeF3<Rational>> grid3{{1, 0, 1}, {2, 1, -1}, {make_rational(1, 3), -2, 5}};
    for (int n = 3; n <= 8; ++n) {
        const F3Params<Rational> p{n, small_rational(rng), small_rational(rng), small_rational(rng), 0};
        for (const auto& c : grid3) {
            const auto v = verify_criterion_f3(p, c);
            REQUIRE(v.ok);
            CHECK(is_isomorphism(build_f3(p), build_f3(transform_f3(p, c)), *v.phi));
        }
    }
}

TEST_CASE("composing two F1 changes gives pairwise isomorphic algebras") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = random_f1(rng, 4 + trial);
        const BasisChangeF1<Rational> c1{2, -1}, c2{make_rational(1, 2), 3};
        const auto q = transform_f1(p, c1);
        const auto r = transform_f1(q, c2);
        const auto v1 = verify_criterion_f1(p, c1);
        const auto v2 = verify_criterion_f1(q, c2);
        REQUIRE(v1.ok);
        REQUIRE(v2.ok);
        CHECK(is_isomorphism(build_f1(p), build_f1(r), *v1.phi * *v2.phi));
    }
}
