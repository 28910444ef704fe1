#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

F1Params<Rational> example_params(const Rational& theta = 5) {
    auto p = F1Params<Rational>::zero(5);
    p.alpha = {{3, 1}, {4, -2}, {5, 5}};
    p.theta = theta;
    return p;
}

template <ExactField F>
bool same_span(const std::vector<Matrix<F>>& a, const std::vector<Matrix<F>>& b, std::size_t n) {
    const auto ea = span_echelon(a, n), eb = span_echelon(b, n);
    return ea.pivots == eb.pivots && ea.reduced == eb.reduced;
}

}  // namespace

TEST_CASE("every linear map of an abelian algebra is a derivation") {
    for (std::size_t m = 1; m <= 4; ++m) CHECK(derivation_space(Algebra<Rational>(m)).dim() == m * m);
}

TEST_CASE("the example has a 6-dimensional derivation algebra") {
    const auto l = build_example_algebra();
    const auto ds = derivation_space(l);
    CHECK(ds.dim() == 6);
    CHECK(ds.dim() == oracle::derivation_dimension(to_tensor(l)));
    const auto t = to_tensor(l);
    for (const auto& d : ds.basis) {
        CHECK(is_derivation(l, d));
        CHECK(oracle::is_derivation(t, to_dense(d)));
    }
}

TEST_CASE("solver dimension matches the dense oracle on random family algebras") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 5;
        const auto l1 = build_f1(random_f1(rng, n));
        const auto l2 = build_f2(random_f2(rng, n));
        CHECK(derivation_space(l1).dim() == oracle::derivation_dimension(to_tensor(l1)));
        CHECK(derivation_space(l2).dim() == oracle::derivation_dimension(to_tensor(l2)));
        for (const auto& d : derivation_space(l2).basis) CHECK(oracle::is_derivation(to_tensor(l2), to_dense(d)));
    }
}

TEST_CASE("F1 template at the example point") {
    const auto p = example_params();
    F1DerivationAssignment<Rational> asn{std::vector<Rational>(6, Rational(0))};
    asn.a[0] = 1;
    asn.a[1] = 1;
    const auto d = f1_derivation_matrix(p, asn);
    for (int i = 0; i <= 5; ++i) CHECK(d(i, i) == i + 1);
    CHECK(is_derivation(build_f1(p), d));
    CHECK_FALSE(is_nilpotent_matrix(d));
    CHECK(rank(d) == 6);

    F1DerivationAssignment<Rational> zero{std::vector<Rational>(6, Rational(0))};
    CHECK(f1_derivation_matrix(p, zero).is_zero_matrix());

    F1DerivationAssignment<Rational> bad{std::vector<Rational>(6, Rational(0))};
    bad.a[0] = 1;
    bad.a[1] = 2;
    CHECK_THROWS_WITH(f1_derivation_matrix(p, bad), Catch::Matchers::ContainsSubstring("alpha_3(a1-a0)"));
}

TEST_CASE("F1 constraint solutions") {
    CHECK(f1_constraint_solutions(F1Params<Rational>::zero(5)).size() == 2);
    const auto line = f1_constraint_solutions(example_params());
    REQUIRE(line.size() == 1);
    CHECK(line[0][0] == line[0][1]);
    CHECK(f1_constraint_solutions(example_params(0)).empty());
}

TEST_CASE("F2 template") {
    auto p = F2Params<Rational>::zero(5);
    p.gamma = 1;
    F2DerivationAssignment<Rational> asn{std::vector<Rational>(6, Rational(0))};
    asn.a[0] = 2;
    asn.b_1 = 5;
    const auto d = f2_derivation_matrix(p, asn);
    const std::vector<Rational> diag{2, 5, 4, 6, 8, 10};
    for (int i = 0; i <= 5; ++i) CHECK(d(i, i) == diag[i]);
    CHECK(is_derivation(build_f2(p), d));

    F2DerivationAssignment<Rational> zero{std::vector<Rational>(6, Rational(0))};
    CHECK(f2_derivation_matrix(p, zero).is_zero_matrix());

    asn.b_1 = 1;
    CHECK_THROWS_WITH(f2_derivation_matrix(p, asn), Catch::Matchers::ContainsSubstring("gamma(2b1-n*a0)"));
}

TEST_CASE("template spans equal solver spans") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 7;
        const auto p1 = random_f1(rng, n);
        const auto p2 = random_f2(rng, n);
        CHECK(same_span(derivation_space(build_f1(p1)).basis, f1_template_space(p1).basis, n + 1));
        CHECK(same_span(derivation_space(build_f2(p2)).basis, f2_template_space(p2).basis, n + 1));
    }
    for (int n = 4; n <= 9; ++n)
        for (int s = 3; s <= n; ++s) {
            const auto p = f1_representative<Rational>(n, s);
            CHECK(same_span(derivation_space(build_f1(p)).basis, f1_template_space(p).basis, n + 1));
        }
}

TEST_CASE("characteristic nilpotency verdicts") {
    const auto v = is_characteristically_nilpotent(build_example_algebra());
    CHECK_FALSE(v.is_char_nilpotent);
    REQUIRE(v.witness);
    for (int i = 0; i <= 5; ++i) CHECK((*v.witness)(i, i) == i + 1);
    CHECK(v.der_dim == 6);

    CHECK(is_characteristically_nilpotent(build_f1(example_params(0))).is_char_nilpotent);

    const auto ab = is_characteristically_nilpotent(Algebra<Rational>(3));
    CHECK_FALSE(ab.is_char_nilpotent);
    CHECK(ab.witness);
}

TEST_CASE("F1 with theta != alpha_n and some alpha nonzero is characteristically nilpotent") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 5;
        auto p = random_f1(rng, n);
        p.alpha[3 + trial % (n - 2)] = nonzero_rational(rng);
        while (p.theta == p.a(n)) p.theta = small_rational(rng);
        CHECK(f1_constraint_solutions(p).empty());
        CHECK(is_characteristically_nilpotent(build_f1(p)).is_char_nilpotent);
    }
}

TEST_CASE("F2 with gamma != 0 and a non-middle beta is characteristically nilpotent") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + trial % 5;
        auto p = F2Params<Rational>::zero(n);
        p.gamma = nonzero_rational(rng);
        int k;
        do k = 3 + static_cast<int>(rng() % (n - 3));
        while (n % 2 == 0 && k == (n + 2) / 2);
        p.beta[k] = nonzero_rational(rng);
        CHECK(is_characteristically_nilpotent(build_f2(p)).is_char_nilpotent);
    }
}

TEST_CASE("F1 representatives carry a witness on the line a1 = (s-2) a0") {
    for (int n = 5; n <= 9; ++n)
        for (int s = 3; s <= n; ++s) {
            const auto v = is_characteristically_nilpotent(build_f1(f1_representative<Rational>(n, s)));
            REQUIRE_FALSE(v.is_char_nilpotent);
            REQUIRE(v.witness);
            const auto& w = *v.witness;
            CHECK(w(0, 1) == Rational(s - 2) * w(0, 0));
        }
}

TEST_CASE("witness scan is deterministic and seeds only reorder it") {
    const auto basis = derivation_space(build_f1(F1Params<Rational>::zero(5))).basis;
    const auto a = find_non_nilpotent(basis);
    const auto b = find_non_nilpotent(basis);
    REQUIRE(a);
    CHECK(*a == *b);
    WitnessScanOptions seeded;
    seeded.seed = 7;
    const auto c = find_non_nilpotent(basis, seeded);
    REQUIRE(c);
    CHECK_FALSE(is_nilpotent_matrix(*c));

    // Only a combination of two nilpotent generators is non-nilpotent.
    Matrix<Rational> e01(2, 2), e10(2, 2);
    e01(0, 1) = 1;
    e10(1, 0) = 1;
    const auto w = find_non_nilpotent<Rational>({e01, e10});
    REQUIRE(w);
    CHECK(*w == e01 + e10);
    WitnessScanOptions none;
    none.range = 0;
    CHECK_FALSE(find_non_nilpotent<Rational>({e01, e10}, none));
}
