// Lists the F1^s representatives for one n, with their Catalan coefficients
// and the Engel verdict.

#include <cstdlib>
#include <iostream>

#include "leibniz/leibniz.hpp"

using namespace leibniz;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 7;
    if (n < 3) {
        std::cerr << "n must be at least 3\n";
        return 2;
    }
    for (int s = 3; s <= n; ++s) {
        const auto p = f1_representative<Rational>(n, s);
        const auto c = classify_checked(p);
        std::cout << "s=" << s << "  alpha =";
        for (int k = 3; k <= n; ++k) std::cout << ' ' << to_string(p.a(k));
        std::cout << "  theta = " << to_string(p.theta) << "  char-nilpotent: " << (c.engel_char_nilpotent ? "yes" : "no")
                  << "\n";
    }
}
