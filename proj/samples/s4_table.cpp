// Prints every Kazhdan-Lusztig polynomial of S_4 that is not 1, then the
// parabolic table of S_4 / S_3 for both markers.

#include "klpar/parabolic.hpp"

#include <iostream>

int main() {
    using namespace klpar;
    auto sys = build_system(GeneralizedCartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));

    KLTable table(sys);
    for (const auto& layer : elements_up_to_length(*sys, 6))
        for (const auto& w : layer)
            for (const auto& y : table.interval_below(w)) {
                const LaurentPoly p = table.kl_polynomial(y, w);
                if (!(p == LaurentPoly(1)))
                    std::cout << "P[" << y.word_string() << "; " << w.word_string() << "] = " << p << "\n";
            }

    const std::vector<int> J{0, 1};
    for (Marker a : {Marker::q, Marker::minus_one}) {
        ParabolicKLTable ptable(sys, {J, a});
        std::cout << "\nJ = {0,1}, a = " << to_string(a) << "\n";
        for (const auto& layer : elements_up_to_length(*sys, 3))
            for (const auto& w : layer) {
                if (!is_min_coset_rep(w, J)) continue;
                for (const auto& y : ptable.interval_below(w))
                    std::cout << "  P[" << y.word_string() << "; " << w.word_string()
                              << "] = " << ptable.kl_polynomial(y, w) << "\n";
            }
    }
}
