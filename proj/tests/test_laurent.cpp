#include "klpar/laurent.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using klpar::LaurentPoly;

namespace {

const LaurentPoly q = LaurentPoly::q();

LaurentPoly random_poly() {
    std::uniform_int_distribution<int> len(0, 5), lo(-4, 4), c(-6, 6);
    std::vector<klpar::BigInt> coeffs;
    for (int i = len(fixtures::rng()); i > 0; --i) coeffs.emplace_back(c(fixtures::rng()));
    return LaurentPoly::from_coefficients(lo(fixtures::rng()), coeffs);
}

}  // namespace

TEST(Laurent, Arithmetic) {
    EXPECT_EQ((1 + q) + LaurentPoly(-1), q);
    EXPECT_EQ((1 + q) * (1 - q), 1 - q * q);
    EXPECT_EQ(LaurentPoly::q(-1) * q, LaurentPoly(1));
    EXPECT_EQ(-(1 + q), LaurentPoly(-1) - q);
}

TEST(Laurent, Bar) {
    EXPECT_EQ(q.bar(), LaurentPoly::q(-1));
    EXPECT_EQ((1 + q).bar(), 1 + LaurentPoly::q(-1));
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly();
        EXPECT_EQ(p.bar().bar(), p);
    }
}

TEST(Laurent, DegreeQueries) {
    EXPECT_EQ((1 + q * q).degree(), 2);
    EXPECT_EQ((1 + q).coeff(1), 1);
    EXPECT_EQ((1 + q).coeff(7), 0);
    EXPECT_FALSE(LaurentPoly::q(-1).is_ordinary_polynomial());
    EXPECT_TRUE(LaurentPoly().is_ordinary_polynomial());
    EXPECT_FALSE(LaurentPoly().degree().has_value());
    EXPECT_FALSE(LaurentPoly().min_degree().has_value());
    EXPECT_EQ((LaurentPoly::q(-3) + q).min_degree(), -3);
}

TEST(Laurent, CanonicalStorage) {
    const auto p = LaurentPoly::from_coefficients(-2, {0, 0, 1, 2, 0});
    EXPECT_EQ(p.min_exponent(), 0);
    EXPECT_EQ(p.coefficients().size(), 2u);
    EXPECT_EQ(p, 1 + 2 * q);
    const auto z = (1 + q) - (1 + q);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.min_exponent(), 0);
    EXPECT_EQ(z, LaurentPoly());
    EXPECT_EQ(LaurentPoly::monomial(0, 5), LaurentPoly());
}

TEST(Laurent, ToString) {
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_EQ((1 + q - LaurentPoly::monomial(3, -2)).to_string(), "-3q^-2 + 1 + q");
    EXPECT_EQ((-q).to_string(), "-q");
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    }
}

TEST(Laurent, MonomialDegreesAdd) {
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) EXPECT_EQ((LaurentPoly::q(i) * LaurentPoly::monomial(3, j)).degree(), i + j);
}

TEST(Laurent, BigCoefficients) {
    LaurentPoly p = 1 + q;
    LaurentPoly acc = 1;
    for (int i = 0; i < 80; ++i) acc *= p;
    EXPECT_EQ(acc.coeff(40), klpar::BigInt("107507208733336176461620"));
    EXPECT_TRUE(acc.has_nonnegative_coefficients());
}
