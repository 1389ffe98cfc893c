#pragma once

#include "klpar/coxeter.hpp"

#include <random>
#include <vector>

namespace fixtures {

inline std::shared_ptr<const klpar::CoxeterSystem> make(std::vector<std::vector<int>> a) {
    return klpar::build_system(klpar::GeneralizedCartanMatrix(std::move(a)));
}

inline auto A2() { return make({{2, -1}, {-1, 2}}); }
inline auto A3() { return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); }
inline auto B2() { return make({{2, -2}, {-1, 2}}); }
inline auto G2() { return make({{2, -3}, {-1, 2}}); }
inline auto A1t() { return make({{2, -2}, {-2, 2}}); }

inline std::vector<klpar::Element> all_up_to(const klpar::CoxeterSystem& sys, int L) {
    return klpar::flatten(klpar::elements_up_to_length(sys, L));
}

/// Every subset of {0..rank-1}, in bitmask order.
inline std::vector<std::vector<int>> subsets(int rank) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << rank); ++mask) {
        auto& J = out.emplace_back();
        for (int i = 0; i < rank; ++i)
            if (mask & (1 << i)) J.push_back(i);
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917);
    return gen;
}

template <class T>
const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng())];
}

}  // namespace fixtures
