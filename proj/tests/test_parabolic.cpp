#include "klpar/parabolic.hpp"
#include "klpar/verify.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace klpar;
using fixtures::A1t;
using fixtures::A2;
using fixtures::A3;
using fixtures::B2;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::q(-1);

ParabolicElement TJ(const ParabolicData& ctx, const Element& w, const LaurentPoly& c = 1) {
    return ParabolicElement::basis(ctx, w, c);
}

std::vector<Element> coset_reps(const CoxeterSystem& sys, const std::vector<int>& J, int L) {
    std::vector<Element> out;
    for (const auto& w : fixtures::all_up_to(sys, L))
        if (is_min_coset_rep(w, J)) out.push_back(w);
    return out;
}

const std::vector<int> J1{1};

}  // namespace

TEST(Phi, Examples) {
    auto sys = A2();
    const Element e = sys->identity(), s0 = sys->simple_reflection(0), s1 = sys->simple_reflection(1);
    const ParabolicData cq{J1, Marker::q}, cm{J1, Marker::minus_one};
    EXPECT_EQ(phi(HeckeElement::basis(s1), cq), TJ(cq, e, q));
    EXPECT_EQ(phi(HeckeElement::basis(s1), cm), TJ(cm, e, -1));
    for (const auto& w : coset_reps(*sys, J1, 3)) EXPECT_EQ(phi(HeckeElement::basis(w), cq), TJ(cq, w));
    EXPECT_THROW(TJ(cq, s1), Error);
    (void)s0;
}

TEST(TsAction, Examples) {
    auto sys = A2();
    const Element e = sys->identity(), s0 = sys->simple_reflection(0);
    const ParabolicData cq{J1, Marker::q}, cm{J1, Marker::minus_one};
    EXPECT_EQ(ts_action(1, TJ(cq, e)), TJ(cq, e, q));
    EXPECT_EQ(ts_action(1, TJ(cm, e)), TJ(cm, e, -1));
    for (const auto& ctx : {cq, cm}) EXPECT_EQ(ts_action(0, TJ(ctx, e)), TJ(ctx, s0));
}

TEST(TsAction, MatchesLiftMultiplyProject) {
    for (auto make : {A3, B2, A1t}) {
        auto sys = make();
        for (const auto& J : fixtures::subsets(sys->rank()))
            for (Marker a : {Marker::q, Marker::minus_one}) {
                const ParabolicData ctx{J, a};
                for (const auto& w : fixtures::all_up_to(*sys, 5))
                    for (int i = 0; i < sys->rank(); ++i)
                        EXPECT_EQ(ts_action(i, phi(HeckeElement::basis(w), ctx)),
                                  phi(mul_T(HeckeElement::basis(w), i, Side::left), ctx));
            }
    }
}

TEST(BarParabolic, Examples) {
    auto sys = A2();
    const Element e = sys->identity(), s0 = sys->simple_reflection(0);
    const ParabolicData cq{J1, Marker::q};
    EXPECT_EQ(bar_parabolic(TJ(cq, e)), TJ(cq, e));
    EXPECT_EQ(bar_parabolic(TJ(cq, s0)), TJ(cq, s0, qi) + TJ(cq, e, qi - 1));
}

TEST(JParabolic, Examples) {
    auto sys = A2();
    const Element e = sys->identity(), s0 = sys->simple_reflection(0);
    const ParabolicData cq{J1, Marker::q}, cm{J1, Marker::minus_one};
    EXPECT_EQ(j_parabolic(TJ(cq, e)), TJ(cm, e));
    EXPECT_EQ(j_parabolic(TJ(cq, s0)), TJ(cm, s0, -1) + TJ(cm, e, q - 1));
}

TEST(Involutions, ParabolicOnA3) {
    auto sys = A3();
    for (const auto& J : fixtures::subsets(3))
        for (Marker a : {Marker::q, Marker::minus_one}) {
            const ParabolicData ctx{J, a};
            for (const auto& w : coset_reps(*sys, J, 4)) {
                EXPECT_EQ(bar_parabolic(bar_parabolic(TJ(ctx, w))), TJ(ctx, w));
                const ParabolicElement jw = j_parabolic(TJ(ctx, w));
                EXPECT_EQ(jw.context().a, dagger(a));
                EXPECT_EQ(j_parabolic(jw), TJ(ctx, w));
            }
        }
}

TEST(Phi, IntertwinesBarAndJ) {
    auto sys = A3();
    for (const auto& J : fixtures::subsets(3))
        for (Marker a : {Marker::q, Marker::minus_one}) {
            const ParabolicData ctx{J, a};
            for (const auto& v : fixtures::all_up_to(*sys, 6)) {
                const HeckeElement tv = HeckeElement::basis(v);
                EXPECT_EQ(phi(bar(tv), ctx), bar_parabolic(phi(tv, ctx)));
                EXPECT_EQ(j_parabolic(phi(tv, ctx)), phi(j_involution(tv), ctx.with_dagger()));
            }
        }
}

TEST(ParabolicKL, SmallExamples) {
    auto sys = A2();
    const Element e = sys->identity(), s0 = sys->simple_reflection(0);
    KLTable ordinary(sys);
    for (Marker a : {Marker::q, Marker::minus_one}) {
        const ParabolicData ctx{J1, a};
        ParabolicKLTable table(sys, ctx);
        EXPECT_EQ(table.kl_element(e), TJ(ctx, e));
        EXPECT_EQ(table.kl_element(s0), TJ(ctx, s0) + TJ(ctx, e));
        EXPECT_EQ(table.inverse_kl(s0, s0), LaurentPoly(1));
        EXPECT_TRUE(deodhar_remark_identity(e, table));
        EXPECT_TRUE(deodhar_remark_identity(s0, table));
        EXPECT_EQ(compare_Q(ordinary, ctx, s0, s0), LaurentPoly(1));
    }
    EXPECT_EQ(compare_P_minus1(ordinary, J1, e, s0), LaurentPoly(1));
    EXPECT_EQ(compare_P_minus1(ordinary, J1, s0, s0), LaurentPoly(1));
    EXPECT_EQ(compare_P_q(ordinary, J1, e, s0), LaurentPoly(1));
    EXPECT_EQ(compare_P_q(ordinary, J1, s0, s0), LaurentPoly(1));
    EXPECT_EQ(compare_Q(ordinary, {J1, Marker::minus_one}, e, s0), LaurentPoly(1));
    ParabolicKLTable minus(sys, {J1, Marker::minus_one});
    EXPECT_EQ(minus.inverse_kl(e, s0), LaurentPoly(1));
}

TEST(ParabolicKL, RejectsNonCosetReps) {
    auto sys = A2();
    ParabolicKLTable table(sys, {J1, Marker::q});
    try {
        table.kl_element(sys->simple_reflection(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotMinCosetRep);
    }
}

TEST(ParabolicKL, CanonicalBasisAndComparisons) {
    for (auto make : {A2, A3, B2}) {
        auto sys = make();
        KLTable ordinary(sys);
        const auto all = fixtures::all_up_to(*sys, 12);
        for (const auto& J : fixtures::subsets(sys->rank()))
            for (Marker a : {Marker::q, Marker::minus_one}) {
                const ParabolicData ctx{J, a};
                ParabolicKLTable table(sys, ctx);
                ParabolicCanonicalOracle oracle(sys, ctx);
                for (const auto& w : all) {
                    if (!is_min_coset_rep(w, J)) continue;
                    const auto& cw = table.kl_element(w);
                    EXPECT_FALSE(table.canonical_violation(cw, w));
                    EXPECT_EQ(oracle.canonical(w), cw);
                    ParabolicElement rebuilt(ctx);
                    for (const auto& y : table.interval_below(w)) {
                        const LaurentPoly P = table.kl_polynomial(y, w);
                        const LaurentPoly& Q = table.inverse_kl(y, w);
                        EXPECT_TRUE(P.has_nonnegative_coefficients());
                        EXPECT_TRUE(Q.has_nonnegative_coefficients());
                        EXPECT_FALSE(polynomial_bound_violation(Q, y, w));
                        const LaurentPoly expected =
                            a == Marker::minus_one ? compare_P_minus1(ordinary, J, y, w) : compare_P_q(ordinary, J, y, w);
                        EXPECT_EQ(P, expected) << ctx.J.size() << " " << y.word_string() << " " << w.word_string();
                        EXPECT_EQ(Q, compare_Q(ordinary, ctx, y, w));
                        rebuilt += table.kl_element(y) * (Q * LaurentPoly(sign_power(w.length() - y.length())));
                    }
                    EXPECT_EQ(rebuilt, TJ(ctx, w));
                }
            }
    }
}

TEST(ParabolicKL, AffineA1InfiniteWeylGroup) {
    auto sys = A1t();
    KLTable ordinary(sys);
    for (const std::vector<int>& J : {std::vector<int>{0}, std::vector<int>{1}})
        for (Marker a : {Marker::q, Marker::minus_one}) {
            const ParabolicData ctx{J, a};
            ParabolicKLTable table(sys, ctx);
            for (const auto& w : coset_reps(*sys, J, 10))
                for (const auto& y : table.interval_below(w)) {
                    const LaurentPoly expected =
                        a == Marker::minus_one ? compare_P_minus1(ordinary, J, y, w) : compare_P_q(ordinary, J, y, w);
                    EXPECT_EQ(table.kl_polynomial(y, w), expected);
                    EXPECT_EQ(table.inverse_kl(y, w), compare_Q(ordinary, ctx, y, w));
                }
        }
}

TEST(ParabolicKL, JConjugateIdentityOnA3) {
    auto sys = A3();
    for (const auto& J : fixtures::subsets(3))
        for (Marker a : {Marker::q, Marker::minus_one}) {
            ParabolicKLTable dagger_table(sys, {J, dagger(a)});
            for (const auto& w : coset_reps(*sys, J, 5)) EXPECT_TRUE(deodhar_remark_identity(w, dagger_table));
        }
}
