#ifndef LEIBNIZ_CLASSIFICATION_HPP
#define LEIBNIZ_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/combinatorics.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"

namespace leibniz {

enum class Label {
    F1s,
    F2Odd,
    F2Even1,
    F2Even2,
    F2j,
    F3_1,
    F3_2,
    F3_3,
    NatGraded,
    CharNilpotent,
    Unclassified,
};

inline std::string to_string(Label l) {
    switch (l) {
        case Label::F1s: return "F1^s";
        case Label::F2Odd: return "F2-odd";
        case Label::F2Even1: return "F2-even-1";
        case Label::F2Even2: return "F2-even-2";
        case Label::F2j: return "F2-j";
        case Label::F3_1: return "F3-1";
        case Label::F3_2: return "F3-2";
        case Label::F3_3: return "F3-3";
        case Label::NatGraded: return "NatGraded";
        case Label::CharNilpotent: return "CharNilpotent";
        case Label::Unclassified: return "Unclassified";
    }
    return "?";
}

/// Class of a family algebra. `index` is s for F1^s and j for F2-j;
/// `value` is beta^2/gamma for F2-even-1 (an isomorphism invariant; equal to
/// beta_{(n+2)/2}^2 when gamma = 1); `theta_class` marks F1(0,...,0,theta != 0).
template <ExactField F>
struct RepresentativeTag {
    int family = 1;
    Label label = Label::NatGraded;
    int index = 0;
    std::optional<F> value;
    bool theta_class = false;

    friend bool operator==(const RepresentativeTag&, const RepresentativeTag&) = default;
};

template <ExactField F>
bool predicts_char_nilpotent(const RepresentativeTag<F>& t) {
    return t.label == Label::CharNilpotent;
}

/// alpha_k = (-1)^t C^{s-1}_{t+1} for k = s + t(s-2), zero otherwise; theta = alpha_n.
template <ExactField F>
F1Params<F> f1_representative(int n, int s) {
    if (n < 3 || s < 3 || s > n) throw ConstraintViolation("f1_representative needs 3 <= s <= n");
    F1Params<F> p = F1Params<F>::zero(n);
    for (int k = s; k <= n; ++k) {
        if ((k - s) % (s - 2) != 0) continue;
        const int t = (k - s) / (s - 2);
        const BigInt c = p_catalan(s - 1, t + 1);
        p.alpha[k] = F(Rational(t % 2 ? BigInt(-c) : c));
    }
    p.theta = p.a(n);
    return p;
}

/// alpha_k = k(s-2)/(2(s-k)) * sum_{j=4}^{k} alpha_{j-1} alpha_{k-j+3} for s < k <= n.
template <ExactField F>
bool verify_recurrence_ak(const F1Params<F>& p, int s) {
    for (int k = s + 1; k <= p.n; ++k) {
        const F sum = detail::quadratic_sum<F>([&p](int t) { return p.a(t); }, k);
        const F rhs = F(F(make_rational(k * (s - 2), 2 * (s - k))) * sum);
        if (p.a(k) != rhs) return false;
    }
    return true;
}

/// Some alpha_i alpha_j != 0 with 3 <= i != j <= n.
template <ExactField F>
bool tnil_hypothesis(const F1Params<F>& p) {
    int nonzero = 0;
    for (int k = 3; k <= p.n; ++k) nonzero += !is_zero(p.a(k));
    return nonzero >= 2;
}

template <ExactField F>
RepresentativeTag<F> classify_f1(const F1Params<F>& p) {
    p.validate();
    const int n = p.n;
    RepresentativeTag<F> tag{1, Label::NatGraded};
    int s = 0;
    for (int k = 3; k <= n && !s; ++k)
        if (!is_zero(p.a(k))) s = k;
    if (!s) {
        tag.theta_class = !is_zero(p.theta);
        return tag;
    }
    if (p.theta != p.a(n)) {
        tag.label = Label::CharNilpotent;
        return tag;
    }
    const F as = p.a(s);
    for (int k = s; k <= n; ++k) {
        F expected(0);
        if ((k - s) % (s - 2) == 0) {
            const int t = (k - s) / (s - 2);
            const BigInt c = p_catalan(s - 1, t + 1);
            F power(1);
            for (int i = 0; i <= t; ++i) power *= as;
            expected = F(F(Rational(t % 2 ? BigInt(-c) : c)) * power);
        }
        if (p.a(k) != expected) {
            tag.label = Label::CharNilpotent;
            return tag;
        }
    }
    tag.label = Label::F1s;
    tag.index = s;
    return tag;
}

template <ExactField F>
RepresentativeTag<F> classify_f2(const F2Params<F>& p) {
    p.validate();
    const int n = p.n;
    RepresentativeTag<F> tag{2, Label::NatGraded};
    if (!is_zero(p.gamma)) {
        if (n % 2 == 1) {
            for (int k = 3; k <= n - 1; ++k)
                if (!is_zero(p.b(k))) {
                    tag.label = Label::CharNilpotent;
                    return tag;
                }
            tag.label = Label::F2Odd;
            return tag;
        }
        const int mid = (n + 2) / 2;
        for (int k = 3; k <= n - 1; ++k)
            if (k != mid && !is_zero(p.b(k))) {
                tag.label = Label::CharNilpotent;
                return tag;
            }
        const F b = p.b(mid);
        const F critical = F(F(make_rational(n, 2)) * b * b);
        if (p.gamma == critical && !is_zero(p.b(n))) {
            tag.label = Label::F2Even2;
            return tag;
        }
        tag.label = Label::F2Even1;
        tag.value = F(b * b / p.gamma);
        return tag;
    }
    int j = 0;
    for (int k = 3; k <= n && !j; ++k)
        if (!is_zero(p.b(k))) j = k;
    if (!j) return tag;
    // With a_0 = 1 and b_1 = j - 1, each k > j needs
    // beta_k (j - k) = (k/2) a_1 sum_k for a common a_1.
    std::optional<F> a1;
    for (int k = j + 1; k <= n; ++k) {
        const F coeff = F(F(make_rational(k, 2)) * detail::quadratic_sum<F>([&p](int t) { return p.b(t); }, k));
        const F rhs = F(p.b(k) * F(j - k));
        if (is_zero(coeff)) {
            if (!is_zero(rhs)) {
                tag.label = Label::CharNilpotent;
                return tag;
            }
            continue;
        }
        const F value = F(rhs / coeff);
        if (a1 && *a1 != value) {
            tag.label = Label::CharNilpotent;
            return tag;
        }
        a1 = value;
    }
    tag.label = Label::F2j;
    tag.index = j;
    return tag;
}

/// Reduced F3. The alpha_flag = 1 tables are outside the classification and
/// come back Unclassified.
template <ExactField F>
RepresentativeTag<F> classify_f3(const F3Params<F>& p) {
    p.validate();
    RepresentativeTag<F> tag{3, Label::NatGraded};
    if (p.alpha_flag) {
        tag.label = Label::Unclassified;
        return tag;
    }
    if (!is_zero(p.theta3)) {
        tag.label = p.theta1 == F(p.theta2 * p.theta2 / (F(4) * p.theta3)) ? Label::F3_3 : Label::CharNilpotent;
    } else if (!is_zero(p.theta2)) {
        tag.label = Label::F3_2;
    } else if (!is_zero(p.theta1)) {
        tag.label = Label::F3_1;
    }
    return tag;
}

template <ExactField F>
struct Classification {
    RepresentativeTag<F> tag;
    bool engel_char_nilpotent = false;
    /// The rule-based tag and the Engel verdict give the same answer.
    /// Unclassified tags make no prediction and always agree.
    bool engel_agrees = true;
};

namespace detail {

template <ExactField F>
Classification<F> with_engel(RepresentativeTag<F> tag, const Algebra<F>& l) {
    Classification<F> c{std::move(tag)};
    c.engel_char_nilpotent = engel_all_nilpotent(derivation_space(l).basis);
    c.engel_agrees = c.tag.label == Label::Unclassified || predicts_char_nilpotent(c.tag) == c.engel_char_nilpotent;
    return c;
}

}  // namespace detail

template <ExactField F>
RepresentativeTag<F> classify(const F1Params<F>& p) {
    return classify_f1(p);
}
template <ExactField F>
RepresentativeTag<F> classify(const F2Params<F>& p) {
    return classify_f2(p);
}
template <ExactField F>
RepresentativeTag<F> classify(const F3Params<F>& p) {
    return classify_f3(p);
}

/// Rule-based class plus the independent Engel verdict.
template <class Params>
auto classify_checked(const Params& p) {
    return detail::with_engel(classify(p), build_algebra(p));
}

/// sqrt(2/n): rational when 2/n is a rational square, otherwise (s/n) sqrt(d)
/// with 2n = s^2 d.
inline QuadraticNumber sqrt_two_over(int n) {
    Rational root;
    if (rational_sqrt(make_rational(2, n), root)) return root;
    std::int64_t s = 1, d = 1;
    square_free_part(2 * static_cast<std::int64_t>(n), s, d);
    return {Rational(0), make_rational(s, n), d};
}

template <ExactField F>
struct TaggedF2 {
    F2Params<F> params;
    RepresentativeTag<F> tag;
};

/// Representatives of the non-characteristically nilpotent F2 classes.
/// Even n: the one-parameter class is instantiated at `samples` for
/// beta_{(n+2)/2}.
inline std::vector<TaggedF2<QuadraticNumber>> f2_representatives(int n, const std::vector<Rational>& samples = {0, 1, 2}) {
    using Q = QuadraticNumber;
    if (n < 3) throw ConstraintViolation("f2_representatives needs n >= 3");
    std::vector<TaggedF2<Q>> out;
    if (n % 2 == 1) {
        auto p = F2Params<Q>::zero(n);
        p.gamma = Q(1);
        out.push_back({p, RepresentativeTag<Q>{2, Label::F2Odd}});
    } else {
        const int mid = (n + 2) / 2;
        for (const Rational& b : samples) {
            auto p = F2Params<Q>::zero(n);
            p.gamma = Q(1);
            p.beta[mid] = Q(b);
            RepresentativeTag<Q> t{2, Label::F2Even1};
            t.value = Q(b * b);
            out.push_back({p, t});
        }
        auto p = F2Params<Q>::zero(n);
        p.gamma = Q(1);
        p.beta[mid] = sqrt_two_over(n);
        p.beta[n] = Q(1);
        out.push_back({p, RepresentativeTag<Q>{2, Label::F2Even2}});
    }
    for (int j = 3; j <= n; ++j) {
        auto p = F2Params<Q>::zero(n);
        p.beta[j] = Q(1);
        RepresentativeTag<Q> t{2, Label::F2j};
        t.index = j;
        out.push_back({p, t});
    }
    return out;
}

template <ExactField F>
std::vector<F3Params<F>> f3_representatives(int n) {
    if (n < 3) throw ConstraintViolation("f3_representatives needs n >= 3");
    return {
        F3Params<F>{n, F(1), F(0), F(0), 0},
        F3Params<F>{n, F(0), F(1), F(0), 0},
        F3Params<F>{n, F(0), F(0), F(1), 0},
    };
}

}  // namespace leibniz

#endif  // LEIBNIZ_CLASSIFICATION_HPP
