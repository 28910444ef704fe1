// Builds the 6-dimensional filiform example, prints its derivation algebra
// and a non-nilpotent derivation.

#include <iostream>

#include "leibniz/leibniz.hpp"

using namespace leibniz;

int main() {
    auto p = F1Params<Rational>::zero(5);
    p.alpha = {{3, 1}, {4, -2}, {5, 5}};
    p.theta = 5;
    const auto l = build_f1(p);

    std::cout << "Leibniz: " << (check_leibniz(l).ok ? "yes" : "no") << "\n";
    std::cout << "lower central series:";
    for (auto d : series_dimensions(lower_central_series(l))) std::cout << ' ' << d;
    std::cout << "\n";

    const auto v = is_characteristically_nilpotent(l);
    std::cout << "dim Der = " << v.der_dim << ", characteristically nilpotent: " << (v.is_char_nilpotent ? "yes" : "no") << "\n";
    std::cout << "two nonzero alphas: " << (tnil_hypothesis(p) ? "yes" : "no") << "\n";
    if (v.witness) {
        std::cout << "witness:\n";
        for (std::size_t i = 0; i < v.witness->rows(); ++i) {
            for (const auto& x : v.witness->row(i)) std::cout << ' ' << to_string(x);
            std::cout << "\n";
        }
    }
}
