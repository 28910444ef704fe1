// leibniz_lab: command-line front end. Every verb prints JSON on stdout
// (catalan prints a bare decimal). Exit codes: 0 ok, 2 bad input, 1 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "leibniz/leibniz.hpp"

namespace {

using namespace leibniz;

/// Input errors that should exit with status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A JSON argument: inline text starting with '{' or '[', "-" for stdin, or a file path.
json read_json_arg(const std::string& arg, const char* what) {
    if (arg.empty()) throw UsageError(std::string("missing --") + what);
    std::string text;
    if (arg.front() == '{' || arg.front() == '[') {
        text = arg;
    } else if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in --") + what + ": " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Calls fn(Rational{}) or fn(QuadraticNumber{}) depending on whether the
/// document needs the quadratic field.
template <class Fn>
auto with_params_field(const json& doc, Fn&& fn) {
    if (has_irrational_scalar(doc)) return fn(QuadraticNumber{});
    return fn(Rational{});
}

template <class Fn>
auto with_algebra_field(const json& doc, Fn&& fn) {
    if (algebra_field(doc).is_rational()) return fn(Rational{});
    return fn(QuadraticNumber{});
}

/// Calls fn(params) with the family-specific parameter struct over F.
template <ExactField F, class Fn>
auto with_family_params(const json& doc, int family, Fn&& fn) {
    if (family != params_family(doc)) throw UsageError("--family does not match the params document");
    switch (family) {
        case 1: return fn(f1_params_from_json<F>(doc));
        case 2: return fn(f2_params_from_json<F>(doc));
        default: return fn(f3_params_from_json<F>(doc));
    }
}

/// An algebra from --algebra, or built from --params.
template <class Fn>
void with_algebra(const std::string& algebra_arg, const std::string& params_arg, Fn&& fn) {
    if (!algebra_arg.empty() && !params_arg.empty()) throw UsageError("give either --algebra or --params, not both");
    if (!algebra_arg.empty()) {
        const json doc = read_json_arg(algebra_arg, "algebra");
        with_algebra_field(doc, [&]<class F>(F) { fn(load_algebra<F>(doc)); });
        return;
    }
    if (params_arg.empty()) throw UsageError("missing --algebra or --params");
    const json doc = read_json_arg(params_arg, "params");
    const int family = params_family(doc);
    with_params_field(doc, [&]<class F>(F) {
        with_family_params<F>(doc, family, [&](const auto& p) { fn(build_algebra(p)); });
    });
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

void print_identity_table(const std::vector<IdentityRow>& rows, const char* index_name) {
    std::cout << pad(index_name, 6) << pad("lhs", 28) << pad("rhs", 28) << "result\n";
    for (const auto& r : rows)
        std::cout << pad(std::to_string(r.index), 6) << pad(to_string(r.lhs), 28) << pad(to_string(r.rhs), 28)
                  << (r.holds() ? "pass" : "FAIL") << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations with filiform Leibniz algebras"};
    app.require_subcommand(1);

    std::string algebra_arg, params_arg, change_arg;
    int family = 0;
    int n = 0;
    int witness_range = 3;

    auto* build = app.add_subcommand("build", "Structure constants of a family algebra");
    bool example = false;
    build->add_option("--family", family, "1, 2 or 3");
    build->add_option("--params", params_arg, "params JSON (file, - or inline)");
    build->add_flag("--example", example, "the 6-dimensional example algebra");

    auto* leib = app.add_subcommand("leibniz", "Check the Leibniz identity on all basis triples");
    leib->add_option("--algebra", algebra_arg);
    leib->add_option("--params", params_arg);

    auto* lcs = app.add_subcommand("lcs", "Lower central series dimensions");
    lcs->add_option("--algebra", algebra_arg);
    lcs->add_option("--params", params_arg);

    auto* derive = app.add_subcommand("derive", "Basis of the derivation algebra");
    std::string derive_source = "solver";
    derive->add_option("--algebra", algebra_arg);
    derive->add_option("--params", params_arg);
    derive->add_option("--source", derive_source, "solver, or template (F1/F2 params only)")
        ->check(CLI::IsMember({"solver", "template"}));

    auto* cn = app.add_subcommand("char-nilpotent", "Decide characteristic nilpotency");
    cn->add_option("--algebra", algebra_arg);
    cn->add_option("--params", params_arg);
    cn->add_option("--witness-range", witness_range)->check(CLI::Range(0, 50));

    auto* classify_cmd = app.add_subcommand("classify", "Class of a family algebra");
    classify_cmd->add_option("--family", family)->required()->check(CLI::Range(1, 3));
    classify_cmd->add_option("--params", params_arg)->required();

    auto* reps = app.add_subcommand("representatives", "Representatives of the non-characteristically nilpotent classes");
    std::vector<std::string> samples{"0", "1", "2"};
    reps->add_option("--family", family)->required()->check(CLI::Range(1, 3));
    reps->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    reps->add_option("--samples", samples, "beta samples for the even-n one-parameter F2 class");

    auto* cat = app.add_subcommand("catalan", "p-th Catalan numbers and identity tables");
    long p = 2, cat_n = 0, t_max = 10;
    std::string table, x = "1", y = "1", z = "2";
    cat->add_option("--p", p)->check(CLI::Range(2L, 1000L));
    cat->add_option("--n", cat_n)->check(CLI::Range(0L, 100000L));
    cat->add_option("--table", table, "convolution | catalan-convolution")
        ->check(CLI::IsMember({"convolution", "catalan-convolution"}));
    cat->add_option("--t-max", t_max)->check(CLI::Range(0L, 1000L));
    cat->add_option("--x", x);
    cat->add_option("--y", y);
    cat->add_option("--z", z);

    auto add_iso_options = [&](CLI::App* c) {
        c->add_option("--family", family)->required()->check(CLI::Range(1, 3));
        c->add_option("--params", params_arg)->required();
        c->add_option("--change", change_arg)->required();
    };
    auto* iso_apply = app.add_subcommand("iso-apply", "Transform parameters by a basis change");
    auto* iso_verify = app.add_subcommand("iso-verify", "Find the isomorphism realizing a basis change");
    add_iso_options(iso_apply);
    add_iso_options(iso_verify);
    auto* iso = app.add_subcommand("iso", "iso apply | iso verify");
    iso->require_subcommand(1);
    auto* iso_apply2 = iso->add_subcommand("apply", "same as iso-apply");
    auto* iso_verify2 = iso->add_subcommand("verify", "same as iso-verify");
    add_iso_options(iso_apply2);
    add_iso_options(iso_verify2);

    auto* suite = app.add_subcommand("verify-suite", "Run the desk-scale verification batteries");
    int n_max = 10;
    suite->add_option("--n-max", n_max)->check(CLI::Range(5, 30));
    suite->add_option("--witness-range", witness_range)->check(CLI::Range(0, 50));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (build->parsed()) {
        if (example) {
            emit(store_algebra(build_example_algebra()));
            return 0;
        }
        if (!family) throw UsageError("build needs --family with --params, or --example");
        const json doc = read_json_arg(params_arg, "params");
        with_params_field(doc, [&]<class F>(F) {
            with_family_params<F>(doc, family, [&](const auto& prm) { emit(store_algebra(build_algebra(prm))); });
        });
        return 0;
    }
    if (leib->parsed()) {
        with_algebra(algebra_arg, params_arg, [&]<class F>(const Algebra<F>& l) {
            const auto r = check_leibniz(l);
            json out{{"ok", r.ok}};
            if (!r.ok) {
                out["triple"] = r.triple;
                out["residual"] = vector_to_json<F>(r.residual);
            }
            emit(out);
        });
        return 0;
    }
    if (lcs->parsed()) {
        with_algebra(algebra_arg, params_arg, [&]<class F>(const Algebra<F>& l) {
            emit(json{{"dims", series_dimensions(lower_central_series(l))},
                      {"nilpotent", is_nilpotent_algebra(l)},
                      {"filiform", is_filiform(l)}});
        });
        return 0;
    }
    if (derive->parsed()) {
        auto report = [](const auto& ds) {
            json basis = json::array();
            for (const auto& m : ds.basis) basis.push_back(matrix_to_json(m));
            emit(json{{"der_dim", ds.dim()}, {"source", to_string(ds.source)}, {"basis", basis}});
        };
        if (derive_source == "template") {
            if (params_arg.empty()) throw UsageError("--source template needs --params");
            const json doc = read_json_arg(params_arg, "params");
            const int fam = params_family(doc);
            with_params_field(doc, [&]<class F>(F) {
                if (fam == 1) report(f1_template_space(f1_params_from_json<F>(doc)));
                else if (fam == 2) report(f2_template_space(f2_params_from_json<F>(doc)));
                else throw UsageError("templates exist for families 1 and 2 only");
            });
            return 0;
        }
        with_algebra(algebra_arg, params_arg, [&]<class F>(const Algebra<F>& l) { report(derivation_space(l)); });
        return 0;
    }
    if (cn->parsed()) {
        WitnessScanOptions opt;
        opt.range = witness_range;
        opt.seed = seed_from_environment();
        with_algebra(algebra_arg, params_arg,
                     [&]<class F>(const Algebra<F>& l) { emit(verdict_to_json(is_characteristically_nilpotent(l, opt))); });
        return 0;
    }
    if (classify_cmd->parsed()) {
        const json doc = read_json_arg(params_arg, "params");
        with_params_field(doc, [&]<class F>(F) {
            with_family_params<F>(doc, family, [&](const auto& prm) { emit(classification_to_json(classify_checked(prm))); });
        });
        return 0;
    }
    if (reps->parsed()) {
        json out = json::array();
        if (family == 1) {
            for (int s = 3; s <= n; ++s) {
                RepresentativeTag<Rational> t{1, Label::F1s, s};
                out.push_back(json{{"params", params_to_json(f1_representative<Rational>(n, s))},
                                   {"tag", to_string(t.label)},
                                   {"payload", tag_payload(t)}});
            }
        } else if (family == 2) {
            std::vector<Rational> values;
            for (const auto& s : samples) values.push_back(parse_rational(s));
            for (const auto& r : f2_representatives(n, values))
                out.push_back(json{{"params", params_to_json(r.params)}, {"tag", to_string(r.tag.label)}, {"payload", tag_payload(r.tag)}});
        } else {
            const Label labels[] = {Label::F3_1, Label::F3_2, Label::F3_3};
            const auto ps = f3_representatives<Rational>(n);
            for (std::size_t i = 0; i < ps.size(); ++i)
                out.push_back(json{{"params", params_to_json(ps[i])}, {"tag", to_string(labels[i])}, {"payload", json::object()}});
        }
        emit(out);
        return 0;
    }
    if (cat->parsed()) {
        if (table == "convolution") {
            print_identity_table(convolution_table(parse_rational(x), parse_rational(y), parse_rational(z), t_max), "n");
        } else if (table == "catalan-convolution") {
            print_identity_table(catalan_convolution_table(p, t_max), "t");
        } else {
            std::cout << p_catalan(p, cat_n).get_str() << '\n';
        }
        return 0;
    }
    const bool is_apply = iso_apply->parsed() || iso_apply2->parsed();
    const bool is_verify = iso_verify->parsed() || iso_verify2->parsed();
    if (is_apply || is_verify) {
        const json doc = read_json_arg(params_arg, "params");
        const json change = read_json_arg(change_arg, "change");
        json both{doc, change};
        with_params_field(both, [&]<class F>(F) {
            if (family != params_family(doc)) throw UsageError("--family does not match the params document");
            if (family == 1) {
                const auto prm = f1_params_from_json<F>(doc);
                const auto c = f1_change_from_json<F>(change);
                emit(is_apply ? params_to_json(transform_f1(prm, c)) : iso_to_json(verify_criterion_f1(prm, c)));
            } else if (family == 2) {
                const auto prm = f2_params_from_json<F>(doc);
                const auto c = f2_change_from_json<F>(change);
                emit(is_apply ? params_to_json(transform_f2(prm, c)) : iso_to_json(verify_criterion_f2(prm, c)));
            } else {
                const auto prm = f3_params_from_json<F>(doc);
                const auto c = f3_change_from_json<F>(change);
                emit(is_apply ? params_to_json(transform_f3(prm, c)) : iso_to_json(verify_criterion_f3(prm, c)));
            }
        });
        return 0;
    }
    if (suite->parsed()) {
        const auto rows = run_verify_suite({n_max, witness_range});
        std::size_t passed = 0;
        for (const auto& r : rows) {
            passed += r.passed;
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << '\n';
        }
        std::cout << passed << "/" << rows.size() << " batteries passed\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // Parse, shape, field, constraint and Leibniz violations.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
