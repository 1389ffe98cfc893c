#include "klpar/cli.hpp"
#include "klpar/verify.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace klpar;
using fixtures::A1t;
using fixtures::A2;
using fixtures::A3;
using fixtures::B2;
using fixtures::G2;

namespace {

SuiteConfig config(std::shared_ptr<const CoxeterSystem> sys, std::string label, std::optional<int> L = std::nullopt) {
    SuiteConfig c;
    c.system = std::move(sys);
    c.label = std::move(label);
    c.max_length = L;
    return c;
}

}  // namespace

TEST(Oracle, TriangularSolveSmall) {
    auto sys = A2();
    EXPECT_EQ(triangular_solve_canonical(sys->identity()), HeckeElement::basis(sys->identity()));
    const ParabolicData ctx{{1}, Marker::minus_one};
    EXPECT_EQ(triangular_solve_canonical(sys->identity(), ctx), ParabolicElement::basis(ctx, sys->identity()));
}

TEST(Oracle, TriangularSolveAgreesOnS4) {
    auto sys = A3();
    KLTable table(sys);
    for (const auto& w : fixtures::all_up_to(*sys, 6)) EXPECT_EQ(triangular_solve_canonical(w), table.kl_element(w));
}

TEST(Oracle, BruteForceBruhat) {
    auto sys = A3();
    const auto all = fixtures::all_up_to(*sys, 6);
    for (const auto& w : all) {
        EXPECT_TRUE(brute_force_bruhat(sys->identity(), w));
        for (const auto& y : all) EXPECT_EQ(brute_force_bruhat(y, w), bruhat_leq(y, w));
    }
    auto aff = A1t();
    const auto layered = fixtures::all_up_to(*aff, 8);
    for (const auto& w : layered)
        for (const auto& y : layered) EXPECT_EQ(brute_force_bruhat(y, w), bruhat_leq(y, w));
}

TEST(Suites, HeckeRelationsCount) {
    const auto r = run_suite("hecke-relations", config(A2(), "A2"));
    EXPECT_EQ(r.attempted, 2u);
    EXPECT_EQ(r.passed, 2u);
}

TEST(Suites, InversionCountsComparablePairs) {
    auto sys = A3();
    std::size_t comparable = 0;
    const auto all = fixtures::all_up_to(*sys, 6);
    for (const auto& w : all)
        for (const auto& y : all) comparable += brute_force_bruhat(y, w);
    const auto r = run_suite("inversion", config(sys, "A3"));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.passed, comparable);
}

TEST(Suites, AffinePositivity) {
    auto c = config(A1t(), "A1~", 10);
    c.J = std::vector<int>{1};
    const auto r = run_suite("positivity", c);
    EXPECT_GT(r.attempted, 0u);
    EXPECT_TRUE(r.ok());
}

TEST(Suites, EverySuitePassesOnSmallSystems) {
    struct Case {
        std::shared_ptr<const CoxeterSystem> sys;
        const char* label;
        std::optional<int> L;
        std::optional<std::vector<int>> J;
    };
    const std::vector<Case> cases = {{A2(), "A2", {}, {}},
                                     {B2(), "B2", {}, {}},
                                     {G2(), "G2", {}, {}},
                                     {A1t(), "A1~", 6, std::vector<int>{0}}};
    for (const auto& c : cases)
        for (auto name : kSuiteNames) {
            auto cfg = config(c.sys, c.label, c.L);
            cfg.J = c.J;
            const auto r = run_suite(name, cfg);
            EXPECT_TRUE(r.ok()) << name << " on " << c.label;
            EXPECT_GT(r.attempted, 0u) << name << " on " << c.label;
            EXPECT_LE(r.passed, r.attempted);
        }
}

TEST(Suites, Errors) {
    try {
        run_suite("no-such-suite", config(A2(), "A2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownSuite);
    }
    try {
        run_suite("kl-defining", config(A1t(), "A1~"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ConfigurationInvalid);
    }
    auto c = config(A1t(), "A1~");
    c.J = std::vector<int>{0, 1};
    c.a = Marker::q;
    try {
        run_suite("compare-Q", c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ConfigurationInvalid);
    }
}

TEST(Suites, ReportsAreDeterministic) {
    for (auto name : {"parabolic-inversion", "compare-Q", "sja-pairing"}) {
        const auto a = cli::report_to_json(run_suite(name, config(B2(), "B2"))).dump();
        const auto b = cli::report_to_json(run_suite(name, config(B2(), "B2"))).dump();
        EXPECT_EQ(a, b);
    }
}
