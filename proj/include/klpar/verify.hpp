#pragma once

/*
 * Independent oracles and identity suites.
 *
 * The canonical-basis oracle never touches the mu-recursion: it tabulates
 * bar(T_y) for the index set below w and solves the defining conditions
 * directly. Writing C_w = sum P_x T_x and bar(T_y) = sum_x B_{x,y} T_x with
 * B_{x,x} = q^{-l(x)}, bar(C_w) = q^{-l(w)} C_w reads at T_x as
 *
 *   P_x - q^{d} bar(P_x) = q^{l(w)} sum_{y > x} bar(P_y) B_{x,y},   d = l(w) - l(x).
 *
 * Under deg P_x <= (d-1)/2 the two terms on the left have disjoint exponent
 * ranges, so P_x is the part of the right side below d/2 and the rest must
 * mirror it exactly. Processing x by decreasing length makes the right side
 * known at each step.
 */

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klpar/coxeter.hpp"
#include "klpar/error.hpp"
#include "klpar/hecke.hpp"
#include "klpar/laurent.hpp"
#include "klpar/parabolic.hpp"

namespace klpar {

namespace detail {

template <class BarFn>
std::map<Element, LaurentPoly> solve_canonical_column(const Element& w, const std::vector<Element>& index_set,
                                                      BarFn&& bar_of) {
    std::map<Element, LaurentPoly> known;
    known.emplace(w, 1);
    for (auto it = index_set.rbegin(); it != index_set.rend(); ++it) {
        const Element& x = *it;
        if (x == w) continue;
        const auto& bar_x = bar_of(x);
        if (bar_x.coefficient(x) != LaurentPoly::q(-x.length()))
            throw Error(Errc::NoSolution, "bar(T[" + x.word_string() + "]) has an unexpected leading coefficient");
        LaurentPoly residual;
        for (const auto& [y, p] : known) {
            if (y.length() <= x.length()) continue;
            const LaurentPoly b = bar_of(y).coefficient(x);
            if (!b.is_zero()) residual += p.bar() * b;
        }
        const LaurentPoly rhs = residual.shifted(w.length());
        const int gap = w.length() - x.length();
        const LaurentPoly low = rhs.is_zero() ? LaurentPoly() : rhs.restricted(*rhs.min_degree(), (gap - 1) / 2);
        if (!low.is_ordinary_polynomial() || !(rhs == low - low.bar().shifted(gap)))
            throw Error(Errc::NoSolution, "no bounded-degree solution at x=[" + x.word_string() + "], w=[" +
                                              w.word_string() + "]");
        if (!low.is_zero()) known.emplace(x, low);
    }
    return known;
}

}  // namespace detail

/// Recursion-free canonical basis of H, computed from bar(T_y) alone.
class CanonicalOracle {
public:
    explicit CanonicalOracle(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {}

    HeckeElement canonical(const Element& w) {
        const auto column = detail::solve_canonical_column(
            w, bruhat_interval_below(w), [this](const Element& y) -> const HeckeElement& { return bar_T(y); });
        HeckeElement c;
        for (const auto& [y, p] : column) c.add_term(y, p);
        return c;
    }

private:
    const HeckeElement& bar_T(const Element& y) {
        if (auto it = cache_.find(y); it != cache_.end()) return it->second;
        return cache_.emplace(y, invert_T(y.inverse())).first->second;
    }

    std::shared_ptr<const CoxeterSystem> sys_;
    ElementMap<HeckeElement> cache_;
};

/// Recursion-free canonical basis of H^{J,a}.
class ParabolicCanonicalOracle {
public:
    ParabolicCanonicalOracle(std::shared_ptr<const CoxeterSystem> sys, ParabolicData ctx)
        : sys_(std::move(sys)), ctx_(std::move(ctx)) {}

    ParabolicElement canonical(const Element& w) {
        require_min_coset_rep(w, ctx_.J);
        std::vector<Element> index_set;
        for (auto& y : bruhat_interval_below(w))
            if (is_min_coset_rep(y, ctx_.J)) index_set.push_back(std::move(y));
        const auto column = detail::solve_canonical_column(
            w, index_set, [this](const Element& y) -> const ParabolicElement& { return bar_T(y); });
        ParabolicElement c(ctx_);
        for (const auto& [y, p] : column) c.add_term(y, p);
        return c;
    }

private:
    const ParabolicElement& bar_T(const Element& y) {
        if (auto it = cache_.find(y); it != cache_.end()) return it->second;
        return cache_.emplace(y, phi(invert_T(y.inverse()), ctx_)).first->second;
    }

    std::shared_ptr<const CoxeterSystem> sys_;
    ParabolicData ctx_;
    ElementMap<ParabolicElement> cache_;
};

inline HeckeElement triangular_solve_canonical(const Element& w) {
    return CanonicalOracle(w.system_ptr()).canonical(w);
}

inline ParabolicElement triangular_solve_canonical(const Element& w, const ParabolicData& ctx) {
    return ParabolicCanonicalOracle(w.system_ptr(), ctx).canonical(w);
}

/// Every product of a subword of the canonical word of w, each multiplied out from scratch.
inline ElementSet subword_products(const Element& w) {
    const auto& word = w.word();
    const std::size_t n = word.size();
    ElementSet out;
    std::vector<int> sub;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        sub.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1u) sub.push_back(word[k]);
        out.insert(w.system().from_word(sub));
    }
    return out;
}

inline bool brute_force_bruhat(const Element& y, const Element& w) {
    require_same_system(y, w);
    return subword_products(w).contains(y);
}

// ---------------------------------------------------------------------------
// Suites

inline constexpr std::string_view kSuiteNames[] = {
    "hecke-relations",      "involutions", "kl-defining", "inversion",  "parabolic-defining",
    "parabolic-inversion",  "compare-P",   "compare-Q",   "remark-j",   "phi-intertwine",
    "sja-pairing",          "positivity",  "degree-bounds", "bruhat-oracle",
};

struct SuiteConfig {
    std::shared_ptr<const CoxeterSystem> system;
    std::string label;
    std::optional<std::vector<int>> J;  // unset: every subset of S
    std::optional<Marker> a;            // unset: both markers
    std::optional<int> max_length;      // unset: the whole group, which must then be finite
    std::size_t wj_cap = kDefaultParabolicCap;
};

struct FailureInstance {
    std::string check;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string system;
    std::optional<std::vector<int>> J;
    std::optional<Marker> a;
    std::optional<int> max_length;
    std::size_t attempted = 0;
    std::size_t passed = 0;
    std::vector<FailureInstance> failures;

    bool ok() const noexcept { return passed == attempted; }
};

namespace detail {

inline std::string subset_string(std::span<const int> J) {
    std::string s = "{";
    for (std::size_t k = 0; k < J.size(); ++k) s += (k ? "," : "") + std::to_string(J[k]);
    return s + "}";
}

inline std::string context_string(const ParabolicData& ctx) {
    return "J=" + subset_string(ctx.J) + " a=" + std::string(to_string(ctx.a));
}

inline std::string pair_string(const Element& y, const Element& w) {
    return "y=[" + y.word_string() + "] w=[" + w.word_string() + "]";
}

class SuiteRunner {
public:
    SuiteRunner(std::string name, const SuiteConfig& config) : config_(config), table_(config.system, false) {
        report_.suite = std::move(name);
        report_.system = config.label;
        report_.J = config.J;
        report_.a = config.a;
        report_.max_length = config.max_length;
        if (config.J) config_.J = normalize_subset(*config.system, *config.J);
    }

    SuiteReport run() {
        const std::string& name = report_.suite;
        if (name == "hecke-relations") hecke_relations();
        else if (name == "involutions") involutions();
        else if (name == "kl-defining") kl_defining();
        else if (name == "inversion") inversion();
        else if (name == "parabolic-defining") parabolic_defining();
        else if (name == "parabolic-inversion") parabolic_inversion();
        else if (name == "compare-P") compare(false);
        else if (name == "compare-Q") compare(true);
        else if (name == "remark-j") remark_j();
        else if (name == "phi-intertwine") phi_intertwine();
        else if (name == "sja-pairing") sja_pairing();
        else if (name == "positivity") positivity();
        else if (name == "degree-bounds") degree_bounds();
        else if (name == "bruhat-oracle") bruhat_oracle();
        else throw Error(Errc::UnknownSuite, "unknown suite '" + name + "'");
        return std::move(report_);
    }

private:
    const CoxeterSystem& sys() const { return *config_.system; }

    void check(bool ok, std::string_view what, std::string detail) {
        ++report_.attempted;
        if (ok)
            ++report_.passed;
        else
            report_.failures.push_back({std::string(what), std::move(detail)});
    }

    // Exceptions raised while evaluating one instance count as that instance failing.
    template <class Fn>
    void guarded(std::string_view what, const std::string& detail, Fn&& fn) {
        try {
            check(fn(), what, detail);
        } catch (const Error& e) {
            check(false, what, detail + " raised " + e.what());
        }
    }

    const std::vector<Element>& elements() {
        if (elements_) return *elements_;
        if (config_.max_length) {
            elements_ = flatten(elements_up_to_length(sys(), *config_.max_length));
        } else {
            std::vector<int> all(static_cast<std::size_t>(sys().rank()));
            for (int i = 0; i < sys().rank(); ++i) all[static_cast<std::size_t>(i)] = i;
            try {
                elements_ = parabolic_subgroup(sys(), all, config_.wj_cap);
            } catch (const Error& e) {
                if (e.code() != Errc::ParabolicInfinite) throw;
                throw Error(Errc::ConfigurationInvalid, "the group is infinite; a maximum length is required");
            }
        }
        return *elements_;
    }

    std::vector<Element> coset_reps(const ParabolicData& ctx) {
        std::vector<Element> out;
        for (const auto& w : elements())
            if (is_min_coset_rep(w, ctx.J)) out.push_back(w);
        return out;
    }

    bool wj_finite(std::span<const int> J) const {
        try {
            parabolic_subgroup(sys(), J, config_.wj_cap);
            return true;
        } catch (const Error& e) {
            if (e.code() != Errc::ParabolicInfinite) throw;
            return false;
        }
    }

    std::vector<ParabolicData> contexts() const {
        std::vector<std::vector<int>> subsets;
        if (config_.J) {
            subsets.push_back(*config_.J);
        } else {
            const int n = sys().rank();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> J;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1u) J.push_back(i);
                subsets.push_back(std::move(J));
            }
        }
        std::vector<Marker> markers = config_.a ? std::vector<Marker>{*config_.a}
                                                : std::vector<Marker>{Marker::q, Marker::minus_one};
        std::vector<ParabolicData> out;
        for (const auto& J : subsets)
            for (Marker a : markers) out.push_back({J, a});
        return out;
    }

    ParabolicKLTable& parabolic_table(const ParabolicData& ctx) {
        for (auto& t : parabolic_tables_)
            if (t->context() == ctx) return *t;
        parabolic_tables_.push_back(std::make_unique<ParabolicKLTable>(config_.system, ctx, false));
        return *parabolic_tables_.back();
    }

    void hecke_relations() {
        const LaurentPoly q = LaurentPoly::q();
        const Element e = sys().identity();
        for (int i = 0; i < sys().rank(); ++i) {
            const HeckeElement ts = HeckeElement::basis(sys().simple_reflection(i));
            const HeckeElement lhs = multiply(ts + HeckeElement::basis(e), ts - HeckeElement::basis(e, q));
            check(lhs.is_zero(), "quadratic relation", "s=" + std::to_string(i) + " gives " + lhs.to_string());
        }
    }

    void involutions() {
        for (const auto& w : elements()) {
            const HeckeElement tw = HeckeElement::basis(w);
            check(bar(bar(tw)) == tw && j_involution(j_involution(tw)) == tw, "bar and j involutive",
                  "w=[" + w.word_string() + "]");
        }
        for (const auto& ctx : contexts()) {
            for (const auto& w : coset_reps(ctx)) {
                const ParabolicElement tw = ParabolicElement::basis(ctx, w);
                const bool ok = bar_parabolic(bar_parabolic(tw)) == tw && j_parabolic(j_parabolic(tw)) == tw;
                check(ok, "parabolic bar and j involutive", context_string(ctx) + " w=[" + w.word_string() + "]");
            }
        }
    }

    void kl_defining() {
        CanonicalOracle oracle(config_.system);
        for (const auto& w : elements()) {
            guarded("canonical basis", "w=[" + w.word_string() + "]", [&] {
                const HeckeElement& c = table_.kl_element(w);
                return !table_.canonical_violation(c, w) && oracle.canonical(w) == c;
            });
        }
    }

    void parabolic_defining() {
        for (const auto& ctx : contexts()) {
            auto& table = parabolic_table(ctx);
            ParabolicCanonicalOracle oracle(config_.system, ctx);
            for (const auto& w : coset_reps(ctx)) {
                guarded("parabolic canonical basis", context_string(ctx) + " w=[" + w.word_string() + "]", [&] {
                    const ParabolicElement& c = table.kl_element(w);
                    return !table.canonical_violation(c, w) && oracle.canonical(w) == c;
                });
            }
        }
    }

    // For one comparable pair: the inversion identity with Q on the left and
    // on the right, and the dual bar condition; on the diagonal also the
    // reconstruction of the standard basis element from the canonical basis.
    template <class Table, class Basis>
    bool inversion_pair_holds(Table& table, const Element& y, const Element& w, Basis&& standard) {
        LaurentPoly left;
        LaurentPoly right;
        for (const auto& x : table.interval_below(w)) {
            if (x.length() < y.length() || !bruhat_leq(y, x)) continue;
            left += table.inverse_kl(y, x) * table.kl_polynomial(x, w) * LaurentPoly(sign_power(x.length() - y.length()));
            right += table.kl_polynomial(y, x) * table.inverse_kl(x, w) * LaurentPoly(sign_power(w.length() - x.length()));
        }
        const LaurentPoly delta = y == w ? LaurentPoly(1) : LaurentPoly();
        if (!(left == delta) || !(right == delta)) return false;
        if (!detail::dual_bar_condition_holds(y, w, table.bar_T(w),
                                              [&](const Element& a, const Element& b) { return table.inverse_kl(a, b); }))
            return false;
        if (y == w) {
            auto rebuilt = standard(w) * LaurentPoly();
            for (const auto& x : table.interval_below(w))
                rebuilt += table.kl_element(x) * (table.inverse_kl(x, w) * LaurentPoly(sign_power(w.length() - x.length())));
            if (!(rebuilt == standard(w))) return false;
        }
        return true;
    }

    void inversion() {
        for (const auto& w : elements())
            for (const auto& y : table_.interval_below(w))
                guarded("inversion identity", pair_string(y, w), [&] {
                    return inversion_pair_holds(table_, y, w, [](const Element& x) { return HeckeElement::basis(x); });
                });
    }

    void parabolic_inversion() {
        for (const auto& ctx : contexts()) {
            auto& table = parabolic_table(ctx);
            for (const auto& w : coset_reps(ctx))
                for (const auto& y : table.interval_below(w))
                    guarded("parabolic inversion identity", context_string(ctx) + " " + pair_string(y, w), [&] {
                        return inversion_pair_holds(table, y, w, [&](const Element& x) {
                            return ParabolicElement::basis(ctx, x);
                        });
                    });
        }
    }

    void compare(bool inverse) {
        for (const auto& ctx : contexts()) {
            if (ctx.a == Marker::q && !wj_finite(ctx.J)) {
                if (config_.J && config_.a)
                    throw Error(Errc::ConfigurationInvalid,
                                "comparison with a=q needs a finite W_J; " + context_string(ctx) + " is infinite");
                continue;
            }
            auto& table = parabolic_table(ctx);
            for (const auto& w : coset_reps(ctx))
                for (const auto& y : table.interval_below(w)) {
                    const std::string what = inverse ? "inverse comparison" : "comparison";
                    guarded(what, context_string(ctx) + " " + pair_string(y, w), [&] {
                        if (inverse) return compare_Q(table_, ctx, y, w, config_.wj_cap) == table.inverse_kl(y, w);
                        const LaurentPoly via_ordinary = ctx.a == Marker::minus_one
                                                             ? compare_P_minus1(table_, ctx.J, y, w)
                                                             : compare_P_q(table_, ctx.J, y, w, config_.wj_cap);
                        return via_ordinary == table.kl_polynomial(y, w);
                    });
                }
        }
    }

    void remark_j() {
        for (const auto& ctx : contexts()) {
            auto& dagger_table = parabolic_table(ctx.with_dagger());
            for (const auto& w : coset_reps(ctx))
                guarded("j-conjugate basis", context_string(ctx) + " w=[" + w.word_string() + "]",
                        [&] { return deodhar_remark_identity(w, dagger_table); });
        }
    }

    void phi_intertwine() {
        for (const auto& ctx : contexts()) {
            const ParabolicData dual = ctx.with_dagger();
            for (const auto& v : elements()) {
                const HeckeElement tv = HeckeElement::basis(v);
                const ParabolicElement pv = phi(tv, ctx);
                bool ok = phi(bar(tv), ctx) == bar_parabolic(pv) && j_parabolic(pv) == phi(j_involution(tv), dual);
                for (int i = 0; i < sys().rank() && ok; ++i)
                    ok = ts_action(i, pv) == phi(mul_T(tv, i, Side::left), ctx);
                check(ok, "phi intertwines", context_string(ctx) + " v=[" + v.word_string() + "]");
            }
        }
    }

    // <S^{J,a}_w, phi(T_z)> against sum_x (-a)^{l(x)} <S_{wx}, T_z>, using
    // <S_u, T_z> = (-1)^{l(u)} delta_{u,z}: only z = wx survives on the right.
    void sja_pairing() {
        for (const auto& ctx : contexts()) {
            for (const auto& z : elements()) {
                const auto [w, x] = parabolic_decompose(z, ctx.J);
                const ParabolicElement pz = phi(HeckeElement::basis(z), ctx);
                bool ok = pz.size() == 1 && pz.terms().begin()->first == w;
                if (ok) {
                    const LaurentPoly lhs = pz.coefficient(w) * LaurentPoly(sign_power(w.length()));
                    const LaurentPoly minus_a = -marker_value(ctx.a);
                    LaurentPoly rhs = LaurentPoly(sign_power(z.length()));
                    for (int k = 0; k < x.length(); ++k) rhs *= minus_a;
                    ok = lhs == rhs;
                }
                check(ok, "dual pairing", context_string(ctx) + " z=[" + z.word_string() + "]");
            }
        }
    }

    template <class Fn>
    void for_each_polynomial(Fn&& fn) {
        for (const auto& w : elements())
            for (const auto& y : table_.interval_below(w)) {
                fn("P", y, w, table_.kl_polynomial(y, w));
                fn("Q", y, w, table_.inverse_kl(y, w));
            }
        for (const auto& ctx : contexts()) {
            auto& table = parabolic_table(ctx);
            const std::string tag = " " + context_string(ctx);
            for (const auto& w : coset_reps(ctx))
                for (const auto& y : table.interval_below(w)) {
                    fn("P^{J,a}" + tag, y, w, table.kl_polynomial(y, w));
                    fn("Q^{J,a}" + tag, y, w, table.inverse_kl(y, w));
                }
        }
    }

    void positivity() {
        for_each_polynomial([&](const std::string& kind, const Element& y, const Element& w, const LaurentPoly& p) {
            check(p.has_nonnegative_coefficients(), "non-negative coefficients",
                  kind + " " + pair_string(y, w) + " = " + p.to_string());
        });
    }

    void degree_bounds() {
        for_each_polynomial([&](const std::string& kind, const Element& y, const Element& w, const LaurentPoly& p) {
            check(!polynomial_bound_violation(p, y, w), "degree bound", kind + " " + pair_string(y, w) + " = " + p.to_string());
        });
    }

    void bruhat_oracle() {
        const auto& elems = elements();
        ElementMap<ElementSet> below;
        for (const auto& w : elems) below.emplace(w, subword_products(w));
        for (const auto& w : elems)
            for (const auto& y : elems)
                check(bruhat_leq(y, w) == below.at(w).contains(y), "bruhat order", pair_string(y, w));
    }

    SuiteConfig config_;
    SuiteReport report_;
    KLTable table_;
    std::vector<std::unique_ptr<ParabolicKLTable>> parabolic_tables_;
    std::optional<std::vector<Element>> elements_;
};

}  // namespace detail

inline bool is_known_suite(std::string_view name) {
    for (auto s : kSuiteNames)
        if (s == name) return true;
    return false;
}

/// Runs one named identity suite. Checks use exact equality throughout.
inline SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
    if (!is_known_suite(name)) throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(name) + "'");
    return detail::SuiteRunner(std::string(name), config).run();
}

}  // namespace klpar
