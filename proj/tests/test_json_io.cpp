#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace leibniz;

TEST_CASE("scalars serialize canonically") {
    CHECK(scalar_to_json(make_rational(6, 4)).get<std::string>() == "3/2");
    CHECK(scalar_to_json(Rational(-7)).get<std::string>() == "-7");
    const QuadraticNumber q(make_rational(1, 2), make_rational(-1, 3), 3);
    CHECK(scalar_to_json(q).dump() == R"({"a":"1/2","b":"-1/3","d":3})");
    CHECK(scalar_to_json(QuadraticNumber(5)).get<std::string>() == "5");
    CHECK(scalar_from_json<QuadraticNumber>(scalar_to_json(q)) == q);
    CHECK(scalar_from_json<Rational>(json(4)) == 4);
    CHECK_THROWS_AS(scalar_from_json<Rational>(json("1/0")), ParseError);
    CHECK_THROWS_AS(scalar_from_json<Rational>(scalar_to_json(q)), FieldMismatchError);
    CHECK_THROWS_AS(scalar_from_json<QuadraticNumber>(json::parse(R"({"a":"0","b":"1","d":4})")), ParseError);
}

TEST_CASE("algebras round-trip") {
    const auto l = build_example_algebra();
    const json j = store_algebra(l);
    CHECK(load_algebra<Rational>(j) == l);
    CHECK(store_algebra(load_algebra<Rational>(j)).dump() == j.dump());

    auto p = F2Params<QuadraticNumber>::zero(6);
    p.beta[4] = QuadraticNumber(Rational(0), make_rational(1, 3), 3);
    p.beta[6] = QuadraticNumber(1);
    p.gamma = QuadraticNumber(1);
    const auto lq = build_f2(p);
    const json jq = store_algebra(lq);
    CHECK(algebra_field(jq) == FieldDescriptor::quadratic(3));
    CHECK(load_algebra<QuadraticNumber>(jq) == lq);
}

TEST_CASE("malformed algebra documents are rejected") {
    CHECK_THROWS_AS(load_algebra<Rational>(json::parse(R"({"dim":2,"table":[{"i":0,"j":0,"c":[[0,"1/0"]]}]})")), ParseError);
    CHECK_THROWS_AS(load_algebra<Rational>(json::parse(R"({"dim":2,"table":[{"i":0,"j":0,"c":[[5,"1"]]}]})")), ShapeError);
    CHECK_THROWS_AS(load_algebra<Rational>(json::parse(R"({"table":[]})")), ParseError);
    CHECK_THROWS_AS(field_from_json(json::parse(R"({"kind":"p-adic"})")), ParseError);
}

TEST_CASE("params round-trip") {
    const auto p1 = f1_representative<Rational>(7, 3);
    CHECK(f1_params_from_json<Rational>(params_to_json(p1)) == p1);
    const auto reps = f2_representatives(6);
    for (const auto& r : reps) {
        const json j = params_to_json(r.params);
        CHECK(params_family(j) == 2);
        CHECK(f2_params_from_json<QuadraticNumber>(j) == r.params);
        CHECK(has_irrational_scalar(j) == (r.tag.label == Label::F2Even2));
    }
    const F3Params<Rational> p3{5, 1, 2, 1, 0};
    CHECK(f3_params_from_json<Rational>(params_to_json(p3)) == p3);
    CHECK_THROWS_AS(f1_params_from_json<Rational>(json::parse(R"({"family":1,"n":4,"alpha":{"3":"1"},"theta":"0"})")),
                    ConstraintViolation);
    CHECK_THROWS_AS(f1_params_from_json<Rational>(json::parse(R"({"family":1,"n":3,"alpha":{"x":"1"},"theta":"0"})")),
                    ParseError);
    CHECK_THROWS_AS(params_family(json::parse(R"({"family":4})")), ParseError);
}

TEST_CASE("classification payloads") {
    auto p = F2Params<Rational>::zero(8);
    p.gamma = 2;
    p.beta[5] = 3;
    const auto c = classify_checked(p);
    const json j = classification_to_json(c);
    CHECK(j["tag"] == "F2-even-1");
    CHECK(j["payload"]["beta_sq"] == "9/2");

    const auto f1 = classification_to_json(classify_checked(f1_representative<Rational>(6, 4)));
    CHECK(f1.dump() == R"({"tag":"F1^s","payload":{"s":4},"engel_agrees":true})");

    const auto un = classification_to_json(classify_checked(F3Params<Rational>{5, 1, 0, 0, 1}));
    CHECK(un["tag"] == "Unclassified");
    CHECK(un["payload"]["char_nilpotent"] == false);
}
