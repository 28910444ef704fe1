#ifndef LEIBNIZ_SUITE_HPP
#define LEIBNIZ_SUITE_HPP

#include <string>
#include <vector>

#include "leibniz/classification.hpp"
#include "leibniz/combinatorics.hpp"

namespace leibniz {

struct SuiteRow {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    int n_max = 10;
    int witness_range = 3;
};

namespace detail {

template <class Params>
void engel_battery(std::vector<SuiteRow>& rows, const std::string& name, const std::vector<Params>& cases, int witness_range) {
    std::size_t agree = 0, witnessed = 0, negatives = 0;
    std::string first_bad;
    for (const auto& p : cases) {
        const auto c = classify_checked(p);
        if (c.engel_agrees) ++agree;
        else if (first_bad.empty()) first_bad = "n=" + std::to_string(p.n) + " " + to_string(c.tag.label);
        if (!c.engel_char_nilpotent) {
            ++negatives;
            const auto l = build_algebra(p);
            WitnessScanOptions opt;
            opt.range = witness_range;
            if (find_non_nilpotent(derivation_space(l).basis, opt)) ++witnessed;
        }
    }
    rows.push_back({name + ": Engel verdict matches the class", agree == cases.size(),
                    std::to_string(agree) + "/" + std::to_string(cases.size()) + (first_bad.empty() ? "" : ", first mismatch " + first_bad)});
    rows.push_back({name + ": witness found for every negative verdict", witnessed == negatives,
                    std::to_string(witnessed) + "/" + std::to_string(negatives)});
}

}  // namespace detail

/// Desk-scale batteries: closed form against recurrence, rule-based
/// classes against the Engel verdict, and the counting identities.
inline std::vector<SuiteRow> run_verify_suite(const SuiteOptions& opt = {}) {
    std::vector<SuiteRow> rows;
    const int n_max = std::max(opt.n_max, 5);

    {
        std::size_t total = 0, good = 0;
        for (int n = 5; n <= n_max; ++n)
            for (int s = 3; s <= n; ++s) {
                ++total;
                const auto p = f1_representative<Rational>(n, s);
                const auto t = classify_f1(p);
                if (verify_recurrence_ak(p, s) && t.label == Label::F1s && t.index == s) ++good;
            }
        rows.push_back({"F1^s closed form satisfies the recurrence and classifies back", good == total,
                        std::to_string(good) + "/" + std::to_string(total)});
    }

    {
        std::vector<F1Params<Rational>> f1;
        std::vector<F2Params<QuadraticNumber>> f2;
        std::vector<F3Params<Rational>> f3;
        for (int n = 4; n <= n_max; ++n) {
            for (int s = 3; s <= n; ++s) f1.push_back(f1_representative<Rational>(n, s));
            for (const auto& r : f2_representatives(n)) f2.push_back(r.params);
            for (const auto& p : f3_representatives<Rational>(n)) f3.push_back(p);
        }
        detail::engel_battery(rows, "F1 representatives", f1, opt.witness_range);
        detail::engel_battery(rows, "F2 representatives", f2, opt.witness_range);
        detail::engel_battery(rows, "F3 representatives", f3, opt.witness_range);
    }

    {
        bool ok = true;
        for (long n = 0; n <= 30; ++n) ok = ok && p_catalan(2, n) == catalan(n);
        rows.push_back({"p_catalan(2, n) = catalan(n), n <= 30", ok, ""});
    }
    {
        bool ok = true;
        for (long p = 2; p <= 6; ++p)
            for (long n = 0; n <= 20; ++n) ok = ok && rothe(1, p, n) == Rational(p_catalan(p, n));
        rows.push_back({"rothe(1, p, n) = p_catalan(p, n), p <= 6, n <= 20", ok, ""});
    }
    {
        bool ok = true;
        for (long p = 2; p <= 6; ++p) ok = ok && verify_catalan_convolution(p, 30);
        rows.push_back({"p-Catalan convolution, p <= 6, t <= 30", ok, ""});
    }
    {
        const bool ok = verify_convolution(1, 1, 2, 10) && verify_convolution(1, 2, 3, 8);
        rows.push_back({"Rothe convolution", ok, ""});
    }
    {
        const auto r = catalan_convolution_literal(2, 2);
        rows.push_back({"index-shifted p-Catalan convolution fails at p=2, n=2", !r.holds(),
                        "lhs " + to_string(r.lhs) + ", rhs " + to_string(r.rhs)});
    }
    return rows;
}

}  // namespace leibniz

#endif  // LEIBNIZ_SUITE_HPP
