#ifndef LEIBNIZ_JSON_IO_HPP
#define LEIBNIZ_JSON_IO_HPP

#include <string>
#include <type_traits>

#include "json.hpp"

#include "leibniz/classification.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"
#include "leibniz/isomorphism.hpp"

namespace leibniz {

using json = nlohmann::ordered_json;

// Scalars: rationals as "p/q" ("p" when q = 1); irrational quadratic values as
// {"a": "p/q", "b": "r/s", "d": k}.

inline json scalar_to_json(const Rational& x) { return to_string(x); }

inline json scalar_to_json(const QuadraticNumber& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    return json{{"a", to_string(x.rational_part())}, {"b", to_string(x.irrational_part())}, {"d", x.radicand()}};
}

namespace detail {

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>()), 10));
    throw ParseError("expected a rational scalar, got " + j.dump());
}

}  // namespace detail

template <ExactField F>
F scalar_from_json(const json& j) {
    if (!j.is_object()) return F(detail::rational_from_json(j));
    if (!j.contains("a") || !j.contains("b") || !j.contains("d")) throw ParseError("quadratic scalar needs a, b and d");
    const Rational a = detail::rational_from_json(j.at("a"));
    const Rational b = detail::rational_from_json(j.at("b"));
    if (!j.at("d").is_number_integer()) throw ParseError("radicand d must be an integer");
    const auto d = j.at("d").get<std::int64_t>();
    if constexpr (std::is_same_v<F, Rational>) {
        if (!is_zero(b)) throw FieldMismatchError("irrational scalar in a rational context");
        return a;
    } else {
        if (!is_square_free(d)) throw ParseError("radicand must be square-free and >= 2");
        return F(a, b, d);
    }
}

template <ExactField F>
json vector_to_json(std::span<const F> v) {
    json out = json::array();
    for (const F& x : v) out.push_back(scalar_to_json(x));
    return out;
}

template <ExactField F>
json matrix_to_json(const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json<F>(m.row(i)));
    return out;
}

template <ExactField F>
Vector<F> vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    Vector<F> v;
    for (const auto& x : j) v.push_back(scalar_from_json<F>(x));
    return v;
}

inline json field_to_json(const FieldDescriptor& f) {
    if (f.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "quadratic"}, {"d", f.d}};
}

inline FieldDescriptor field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field needs a kind");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "quadratic") {
        if (!j.contains("d") || !j.at("d").is_number_integer()) throw ParseError("quadratic field needs an integer d");
        const auto d = j.at("d").get<std::int64_t>();
        if (!is_square_free(d)) throw ParseError("radicand must be square-free and >= 2");
        return FieldDescriptor::quadratic(d);
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

/// Omitted (i, j) pairs are zero products; only nonzero pairs are written.
template <ExactField F>
json store_algebra(const Algebra<F>& l) {
    json table = json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) {
            const auto& p = l.product(i, j);
            if (p.empty()) continue;
            json c = json::array();
            for (const auto& [k, v] : p) c.push_back(json::array({k, scalar_to_json(v)}));
            table.push_back(json{{"i", i}, {"j", j}, {"c", c}});
        }
    return json{{"dim", l.dim()}, {"field", field_to_json(l.field())}, {"table", table}};
}

inline FieldDescriptor algebra_field(const json& j) {
    return j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor::rational();
}

template <ExactField F>
Algebra<F> load_algebra(const json& j) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra needs dim");
    if (!j.at("dim").is_number_unsigned()) throw ParseError("dim must be a non-negative integer");
    const auto dim = j.at("dim").get<std::size_t>();
    Algebra<F> l(dim, algebra_field(j));
    if (!j.contains("table")) return l;
    if (!j.at("table").is_array()) throw ParseError("table must be an array");
    auto index = [dim](const json& x, const char* what) {
        if (!x.is_number_unsigned() || x.get<std::size_t>() >= dim)
            throw ShapeError(std::string("index ") + what + " out of range: " + x.dump());
        return x.get<std::size_t>();
    };
    for (const auto& entry : j.at("table")) {
        const std::size_t i = index(entry.at("i"), "i");
        const std::size_t jj = index(entry.at("j"), "j");
        for (const auto& kc : entry.at("c")) {
            if (!kc.is_array() || kc.size() != 2) throw ParseError("table coefficients are [k, scalar] pairs");
            l.add(i, jj, index(kc[0], "k"), scalar_from_json<F>(kc[1]));
        }
    }
    return l;
}

namespace detail {

template <ExactField F>
json coefficients_to_json(const std::map<int, F>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = scalar_to_json(v);
    return out;
}

template <ExactField F>
std::map<int, F> coefficients_from_json(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string(name) + " must be an object keyed by index");
    std::map<int, F> out;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty()) throw ParseError(std::string(name) + " key '" + key + "' is not an index");
        out[k] = scalar_from_json<F>(value);
    }
    return out;
}

inline int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

inline const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace detail

inline int params_family(const json& j) {
    const int f = detail::int_field(j, "family");
    if (f < 1 || f > 3) throw ParseError("family must be 1, 2 or 3");
    return f;
}

template <ExactField F>
json params_to_json(const F1Params<F>& p) {
    return json{{"family", 1}, {"n", p.n}, {"alpha", detail::coefficients_to_json(p.alpha)}, {"theta", scalar_to_json(p.theta)}};
}
template <ExactField F>
json params_to_json(const F2Params<F>& p) {
    return json{{"family", 2}, {"n", p.n}, {"beta", detail::coefficients_to_json(p.beta)}, {"gamma", scalar_to_json(p.gamma)}};
}
template <ExactField F>
json params_to_json(const F3Params<F>& p) {
    return json{{"family", 3},
                {"n", p.n},
                {"theta1", scalar_to_json(p.theta1)},
                {"theta2", scalar_to_json(p.theta2)},
                {"theta3", scalar_to_json(p.theta3)},
                {"alpha_flag", p.alpha_flag}};
}

template <ExactField F>
F1Params<F> f1_params_from_json(const json& j) {
    F1Params<F> p{detail::int_field(j, "n"), detail::coefficients_from_json<F>(detail::field(j, "alpha"), "alpha"),
                  scalar_from_json<F>(detail::field(j, "theta"))};
    p.validate();
    return p;
}
template <ExactField F>
F2Params<F> f2_params_from_json(const json& j) {
    F2Params<F> p{detail::int_field(j, "n"), detail::coefficients_from_json<F>(detail::field(j, "beta"), "beta"),
                  scalar_from_json<F>(detail::field(j, "gamma"))};
    p.validate();
    return p;
}
template <ExactField F>
F3Params<F> f3_params_from_json(const json& j) {
    F3Params<F> p{detail::int_field(j, "n"), scalar_from_json<F>(detail::field(j, "theta1")),
                  scalar_from_json<F>(detail::field(j, "theta2")), scalar_from_json<F>(detail::field(j, "theta3")),
                  j.contains("alpha_flag") ? detail::int_field(j, "alpha_flag") : 0};
    p.validate();
    return p;
}

/// True when some scalar anywhere in the document is an irrational quadratic value.
inline bool has_irrational_scalar(const json& j) {
    if (j.is_object()) {
        if (j.contains("a") && j.contains("b") && j.contains("d")) {
            return !is_zero(detail::rational_from_json(j.at("b")));
        }
        for (const auto& [k, v] : j.items())
            if (has_irrational_scalar(v)) return true;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (has_irrational_scalar(v)) return true;
    }
    return false;
}

template <ExactField F>
BasisChangeF1<F> f1_change_from_json(const json& j) {
    return {scalar_from_json<F>(detail::field(j, "A")), scalar_from_json<F>(detail::field(j, "B"))};
}
template <ExactField F>
BasisChangeF2<F> f2_change_from_json(const json& j) {
    return {scalar_from_json<F>(detail::field(j, "A")), scalar_from_json<F>(detail::field(j, "B")),
            scalar_from_json<F>(detail::field(j, "D"))};
}
template <ExactField F>
BasisChangeF3<F> f3_change_from_json(const json& j) {
    return {scalar_from_json<F>(detail::field(j, "A0")), scalar_from_json<F>(detail::field(j, "A1")),
            scalar_from_json<F>(detail::field(j, "B1"))};
}

template <ExactField F>
json verdict_to_json(const CharNilpotencyVerdict<F>& v) {
    json out{{"der_dim", v.der_dim},
             {"char_nilpotent", v.is_char_nilpotent},
             {"witness", v.witness ? matrix_to_json(*v.witness) : json(nullptr)},
             {"method", v.method}};
    if (v.witness_search_exhausted) out["witness_search_exhausted"] = true;
    return out;
}

template <ExactField F>
json tag_payload(const RepresentativeTag<F>& t) {
    json payload = json::object();
    switch (t.label) {
        case Label::F1s: payload["s"] = t.index; break;
        case Label::F2j: payload["j"] = t.index; break;
        case Label::F2Even1:
            if (t.value) payload["beta_sq"] = scalar_to_json(*t.value);
            break;
        case Label::NatGraded:
            if (t.family == 1) payload["theta_class"] = t.theta_class;
            break;
        default: break;
    }
    return payload;
}

template <ExactField F>
json classification_to_json(const Classification<F>& c) {
    json payload = tag_payload(c.tag);
    if (c.tag.label == Label::Unclassified) payload["char_nilpotent"] = c.engel_char_nilpotent;
    return json{{"tag", to_string(c.tag.label)}, {"payload", payload}, {"engel_agrees", c.engel_agrees}};
}

template <ExactField F>
json iso_to_json(const IsoVerification<F>& v) {
    return json{{"ok", v.ok}, {"phi", v.phi ? matrix_to_json(*v.phi) : json(nullptr)}};
}

}  // namespace leibniz

#endif  // LEIBNIZ_JSON_IO_HPP
