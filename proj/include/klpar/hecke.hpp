#pragma once

/*
 * The Hecke algebra H(W) in the standard basis {T_w}:
 *
 *   T_x T_y = T_{xy}   when l(xy) = l(x) + l(y),
 *   (T_s + 1)(T_s - q) = 0.
 *
 * Normalization: the canonical basis element is C_w = sum_{y <= w} P_{y,w} T_y
 * with bar(C_w) = q^{-l(w)} C_w, so every coefficient stays in Z[q, q^-1]
 * (no square roots of q anywhere).
 */

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klpar/combination.hpp"
#include "klpar/coxeter.hpp"
#include "klpar/error.hpp"
#include "klpar/laurent.hpp"

namespace klpar {

class HeckeElement : public LinearCombination<HeckeElement> {
public:
    HeckeElement() = default;

    /// c * T_w
    static HeckeElement basis(const Element& w, const LaurentPoly& c = 1) {
        HeckeElement h;
        h.add_term(w, c);
        return h;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }
};

enum class Side { left, right };

/// T_{s_i} * h (Side::left) or h * T_{s_i} (Side::right).
inline HeckeElement mul_T(const HeckeElement& h, int i, Side side) {
    HeckeElement out;
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_minus_1 = q - 1;
    for (const auto& [w, r] : h.terms()) {
        Element ws = side == Side::right ? w.times(i) : w.left_times(i);
        if (ws.length() > w.length()) {
            out.add_term(ws, r);
        } else {
            out.add_term(ws, q * r);
            out.add_term(w, q_minus_1 * r);
        }
    }
    return out;
}

namespace detail {

inline const Element* any_element(const HeckeElement& h) {
    return h.is_zero() ? nullptr : &h.terms().begin()->first;
}

// h * T_s^{-1}, where T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
inline HeckeElement right_mul_T_inverse(const HeckeElement& h, int s) {
    const LaurentPoly qinv = LaurentPoly::q(-1);
    HeckeElement out = mul_T(h, s, Side::right) * qinv;
    out += h * (qinv - 1);
    return out;
}

}  // namespace detail

/// Bilinear product; each T_w of the right factor is expanded along the canonical word of w.
inline HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    const Element* ea = detail::any_element(a);
    const Element* eb = detail::any_element(b);
    if (ea && eb) require_same_system(*ea, *eb);
    HeckeElement out;
    for (const auto& [w, r] : b.terms()) {
        HeckeElement partial = a;
        for (int s : w.word()) partial = mul_T(partial, s, Side::right);
        out += partial * r;
    }
    return out;
}

/// T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for the canonical word s_1 ... s_k of w.
inline HeckeElement invert_T(const Element& w) {
    HeckeElement h = HeckeElement::basis(w.system().identity());
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = detail::right_mul_T_inverse(h, *it);
    return h;
}

/// sum r_w T_w  ->  sum bar(r_w) T_{w^{-1}}^{-1}
inline HeckeElement bar(const HeckeElement& h) {
    HeckeElement out;
    for (const auto& [w, r] : h.terms()) out += invert_T(w.inverse()) * r.bar();
    return out;
}

/// sum r_w T_w  ->  sum r_w (-q)^{l(w)} T_{w^{-1}}^{-1}; R-linear.
inline HeckeElement j_involution(const HeckeElement& h) {
    HeckeElement out;
    for (const auto& [w, r] : h.terms()) out += invert_T(w.inverse()) * (r * minus_q_power(w.length()));
    return out;
}

/// Checks the triangularity conditions shared by every canonical basis:
/// coefficient 1 at w, support below w, and for y < w an ordinary polynomial
/// of degree <= (l(w) - l(y) - 1)/2. Returns a description of the first violation.
template <class Combination>
std::optional<std::string> unitriangular_violation(const Combination& c, const Element& w) {
    if (c.coefficient(w) != LaurentPoly(1))
        return "coefficient at w=[" + w.word_string() + "] is " + c.coefficient(w).to_string() + ", expected 1";
    for (const auto& [y, p] : c.terms()) {
        if (y == w) continue;
        const std::string where = "y=[" + y.word_string() + "], w=[" + w.word_string() + "]";
        if (y.length() >= w.length() || !bruhat_leq(y, w)) return "support element not below w: " + where;
        if (!p.is_ordinary_polynomial()) return "coefficient " + p.to_string() + " has negative powers at " + where;
        if (2 * *p.degree() > w.length() - y.length() - 1)
            return "coefficient " + p.to_string() + " violates the degree bound at " + where;
    }
    return std::nullopt;
}

/// Degree conditions shared by P_{y,w} and Q_{y,w}: 1 on the diagonal, and
/// for y < w an ordinary polynomial of degree <= (l(w) - l(y) - 1)/2.
inline std::optional<std::string> polynomial_bound_violation(const LaurentPoly& q, const Element& y, const Element& w) {
    const std::string where = "y=[" + y.word_string() + "], w=[" + w.word_string() + "]";
    if (y == w) {
        if (q != LaurentPoly(1)) return "diagonal polynomial is " + q.to_string() + " at " + where;
        return std::nullopt;
    }
    if (!q.is_ordinary_polynomial()) return "polynomial " + q.to_string() + " has negative powers at " + where;
    if (!q.is_zero() && 2 * *q.degree() > w.length() - y.length() - 1)
        return "polynomial " + q.to_string() + " violates the degree bound at " + where;
    return std::nullopt;
}

struct ElementPairHash {
    std::size_t operator()(const std::pair<Element, Element>& p) const noexcept {
        return p.first.hash() * 0x9e3779b97f4a7c15ull ^ (p.second.hash() + 0x632be59bd9b4e019ull);
    }
};

template <class V>
using PairMap = std::unordered_map<std::pair<Element, Element>, V, ElementPairHash>;

namespace detail {

/// Solves sum_{y <= x <= w} (-1)^{l(x)-l(y)} Q_{y,x} P_{x,w} = delta_{y,w} for
/// Q_{y,w} by recursion on w. `interval(w)` lists the index set below w and
/// `p(x, w)` reads a tabled polynomial.
template <class IntervalFn, class PFn>
const LaurentPoly& solve_inverse(const Element& y, const Element& w, PairMap<LaurentPoly>& memo,
                                 IntervalFn&& interval, PFn&& p) {
    auto key = std::make_pair(y, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LaurentPoly acc;
    if (!(y == w)) {
        const std::vector<Element>& below = interval(w);
        for (const auto& x : below) {
            if (x == w || x.length() < y.length() || !bruhat_leq(y, x)) continue;
            const LaurentPoly pxw = p(x, w);
            if (pxw.is_zero()) continue;
            const LaurentPoly& qyx = solve_inverse(y, x, memo, interval, p);
            if (qyx.is_zero()) continue;
            acc += qyx * pxw * LaurentPoly(sign_power(w.length() - x.length() + 1));
        }
    } else {
        acc = 1;
    }
    return memo.emplace(std::move(key), std::move(acc)).first->second;
}

/// The dual-side uniqueness check for an inverse column: with B_{x,w} the
/// coefficient of basis element x in bar(basis element w),
///   bar( sum_x B_{x,w} (-1)^{l(x)} Q_{y,x} ) = q^{l(y)} (-1)^{l(w)} Q_{y,w}.
template <class Combination, class QFn>
bool dual_bar_condition_holds(const Element& y, const Element& w, const Combination& bar_of_w, QFn&& q) {
    LaurentPoly lhs;
    for (const auto& [x, b] : bar_of_w.terms()) {
        if (x.length() < y.length() || !bruhat_leq(y, x)) continue;
        lhs += b * q(y, x) * LaurentPoly(sign_power(x.length()));
    }
    return lhs.bar() == q(y, w) * LaurentPoly::monomial(sign_power(w.length()), y.length());
}

}  // namespace detail

/*
 * Memoized Kazhdan-Lusztig data for one Coxeter system.
 *
 * The table only grows. Readers may share it; concurrent writers must be
 * serialized by the caller (or use one table each; uniqueness of the
 * canonical basis makes the results identical).
 */
class KLTable {
public:
    explicit KLTable(std::shared_ptr<const CoxeterSystem> sys, bool post_verify = true)
        : sys_(std::move(sys)), post_verify_(post_verify) {}

    const CoxeterSystem& system() const noexcept { return *sys_; }
    const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return sys_; }

    /// C_w = sum_{y <= w} P_{y,w} T_y.
    ///
    /// For the smallest left descent s of w and v = sw,
    ///   C_w = (T_s + 1) C_v - sum mu(z, v) q^{(l(w)-l(z))/2} C_z
    /// over z < v with sz < z. mu(z, v) != 0 forces l(v) - l(z) odd, so the
    /// exponent is an integer. Every result is checked against the defining
    /// conditions (bar(C_w) = q^{-l(w)} C_w, unitriangularity, degree bounds).
    const HeckeElement& kl_element(const Element& w) {
        check_system(w);
        if (auto it = basis_.find(w); it != basis_.end()) return it->second;
        HeckeElement c;
        if (w.is_identity()) {
            c = HeckeElement::basis(w);
        } else {
            const int s = w.word().front();
            const Element v = w.left_times(s);
            const HeckeElement& cv = kl_element(v);
            c = mul_T(cv, s, Side::left) + cv;
            for (const auto& [z, p] : cv.terms()) {
                if (z == v || !z.is_left_descent(s)) continue;
                const int gap = v.length() - z.length();
                if (gap % 2 == 0) continue;
                const BigInt mu = p.coeff((gap - 1) / 2);
                if (mu == 0) continue;
                c -= kl_element(z) * LaurentPoly::monomial(mu, (w.length() - z.length()) / 2);
            }
        }
        if (post_verify_) {
            if (auto bad = canonical_violation(c, w)) throw Error(Errc::PostVerificationFailed, *bad);
        }
        return basis_.emplace(w, std::move(c)).first->second;
    }

    /// P_{y,w}; NotComparable unless y <= w.
    LaurentPoly kl_polynomial(const Element& y, const Element& w) {
        require_leq(y, w);
        return kl_element(w).coefficient(y);
    }

    /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; 0 when that exponent is not an integer.
    BigInt mu(const Element& y, const Element& w) {
        require_leq(y, w);
        const int gap = w.length() - y.length();
        if (gap % 2 == 0) return 0;
        return kl_element(w).coefficient(y).coeff((gap - 1) / 2);
    }

    /// Q_{y,w} by unitriangular inversion of the signed P-matrix over [y, w].
    const LaurentPoly& inverse_kl(const Element& y, const Element& w) {
        require_leq(y, w);
        const auto key = std::make_pair(y, w);
        if (auto it = inverse_.find(key); it != inverse_.end()) return it->second;
        const LaurentPoly& q = solve_q(y, w);
        if (post_verify_) {
            if (auto bad = polynomial_bound_violation(q, y, w)) throw Error(Errc::PostVerificationFailed, *bad);
            const bool ok = detail::dual_bar_condition_holds(
                y, w, bar_T(w), [this](const Element& a, const Element& b) { return solve_q(a, b); });
            if (!ok)
                throw Error(Errc::PostVerificationFailed,
                            "inverse column fails bar-semi-invariance at y=[" + y.word_string() + "], w=[" +
                                w.word_string() + "]");
        }
        return inverse_.at(key);
    }

    /// Bruhat interval [e, w], ShortLex ordered; memoized.
    const std::vector<Element>& interval_below(const Element& w) {
        if (auto it = intervals_.find(w); it != intervals_.end()) return it->second;
        return intervals_.emplace(w, bruhat_interval_below(w)).first->second;
    }

    /// bar(T_y), memoized.
    const HeckeElement& bar_T(const Element& y) {
        if (auto it = bar_cache_.find(y); it != bar_cache_.end()) return it->second;
        return bar_cache_.emplace(y, invert_T(y.inverse())).first->second;
    }

    /// Why `c` is not the canonical basis element at w, if it is not.
    std::optional<std::string> canonical_violation(const HeckeElement& c, const Element& w) {
        if (auto bad = unitriangular_violation(c, w)) return bad;
        HeckeElement barred;
        for (const auto& [y, p] : c.terms()) barred += bar_T(y) * p.bar();
        if (!(barred == c * LaurentPoly::q(-w.length())))
            return "bar(C_w) != q^{-l(w)} C_w for w=[" + w.word_string() + "]";
        return std::nullopt;
    }

    const ElementMap<HeckeElement>& columns() const noexcept { return basis_; }
    const PairMap<LaurentPoly>& inverse_entries() const noexcept { return inverse_; }

private:
    const LaurentPoly& solve_q(const Element& y, const Element& w) {
        return detail::solve_inverse(
            y, w, inverse_, [this](const Element& x) -> const std::vector<Element>& { return interval_below(x); },
            [this](const Element& x, const Element& z) { return kl_element(z).coefficient(x); });
    }

    void check_system(const Element& w) const {
        if (w.system_ptr() != sys_) throw Error(Errc::SystemMismatch, "element does not belong to this table");
    }
    void require_leq(const Element& y, const Element& w) const {
        check_system(y);
        check_system(w);
        if (!bruhat_leq(y, w))
            throw Error(Errc::NotComparable, "[" + y.word_string() + "] is not below [" + w.word_string() + "]");
    }

    std::shared_ptr<const CoxeterSystem> sys_;
    bool post_verify_;
    ElementMap<HeckeElement> basis_;
    PairMap<LaurentPoly> inverse_;
    ElementMap<std::vector<Element>> intervals_;
    ElementMap<HeckeElement> bar_cache_;
};

}  // namespace klpar
