#pragma once

#include <map>
#include <string>
#include <utility>

#include "klpar/coxeter.hpp"
#include "klpar/laurent.hpp"

namespace klpar {

/// Finitely supported combination sum_w c_w B_w over some basis indexed by
/// group elements. No zero coefficient is ever stored. Iteration is ShortLex.
template <class Derived>
class LinearCombination {
public:
    using Terms = std::map<Element, LaurentPoly>;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentPoly coefficient(const Element& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add_term(const Element& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Derived& operator+=(const Derived& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return self();
    }
    Derived& operator-=(const Derived& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return self();
    }
    Derived& operator*=(const LaurentPoly& r) {
        if (r.is_zero()) {
            terms_.clear();
            return self();
        }
        for (auto& [w, c] : terms_) c *= r;
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator*(Derived a, const LaurentPoly& r) { return a *= r; }
    friend Derived operator*(const LaurentPoly& r, Derived a) { return a *= r; }

    /// "c_1*T[w_1] + ..." using canonical words; for failure dumps.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*T[" + w.word_string() + "]";
        }
        return out;
    }

protected:
    Terms terms_;

private:
    Derived& self() { return static_cast<Derived&>(*this); }
};

}  // namespace klpar
