#include <gtest/gtest.h>

#include <xherm/exceptional.hpp>
#include <xherm/hermite.hpp>

using namespace xherm;

namespace {
RationalPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly::from_coeffs(v);
}
}  // namespace

TEST(RationalPoly, ArithmeticAndDegree) {
    const RationalPoly a = poly({1, 2});     // 1 + 2x
    const RationalPoly b = poly({-1, 0, 3});  // -1 + 3x^2
    EXPECT_EQ(a * b, poly({-1, -2, 3, 6}));
    EXPECT_EQ(a + b, poly({0, 2, 3}));
    EXPECT_EQ((a - a).degree(), kZeroDegree);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(b.derivative(), poly({0, 6}));
    EXPECT_EQ(b.leading(), Rational(3));
}

TEST(RationalPoly, EvaluatesExactlyAndInFloatingPoint) {
    const RationalPoly p = poly({1, 0, 2}) * Rational(1, 3);
    EXPECT_EQ(p.eval(Rational(3)), Rational(19, 3));
    EXPECT_NEAR(p.eval(3.0), 19.0 / 3, 1e-14);
    const Complex z(0.5, 1);
    const Complex want = (1.0 + 2.0 * z * z) / 3.0;
    EXPECT_NEAR(std::abs(p.eval(z) - want), 0, 1e-15);
}

TEST(RationalPoly, CoefficientsStayCanonical) {
    RationalPoly p;
    p.set(1, Rational(-12, 3));
    EXPECT_EQ(p.coeff(1).get_str(), "-4");
}

TEST(Hermite, FirstMembers) {
    EXPECT_EQ(hermite(0), poly({1}));
    EXPECT_EQ(hermite(1), poly({0, 2}));
    EXPECT_EQ(hermite(3), poly({0, -12, 0, 8}));
    EXPECT_EQ(hermite(4), poly({12, 0, -48, 0, 16}));
}

TEST(Hermite, RecurrenceMatchesRodrigues) {
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(hermite(n), hermite_rodrigues(n)) << n;
}

TEST(Hermite, DerivativeIdentity) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(hermite(n).derivative(), hermite_derivative(n));
}

TEST(Hermite, ParityAndLeadingCoefficient) {
    for (int n = 0; n <= 15; ++n) {
        const RationalPoly h = hermite(n);
        EXPECT_TRUE(h.has_parity(n % 2));
        EXPECT_EQ(h.leading(), Rational(mpz_class(1) << n));
    }
}

TEST(Hermite, NegativeIndexAtZero) {
    // H_{-1}(0) = sqrt(pi)/2
    EXPECT_NEAR(hermite_negative(Complex(0)).real(), 0.5 * kSqrtPi, 1e-15);
}

TEST(Hhat, ClosedForms) {
    EXPECT_EQ(hhat(0), poly({1}));
    EXPECT_EQ(hhat(3), poly({0, 12, 0, 8}));
    EXPECT_EQ(hhat(4), hermite(4) + hermite(2) * Rational(16) + Rational(16));
    EXPECT_THROW(hhat(1), gap_sequence_error);
    EXPECT_THROW(hhat(2), gap_sequence_error);
}

TEST(Hhat, GapFunctionsAtOrigin) {
    // Hhat_1(0) = sqrt(pi), Hhat_2(0) = 2
    EXPECT_NEAR(hhat_gap(1, Complex(0)).real(), kSqrtPi, 1e-15);
    EXPECT_NEAR(hhat_gap(2, Complex(0)).real(), 2.0, 1e-15);
    EXPECT_THROW(hhat_gap(3, Complex(0)), domain_error);
}

TEST(Xop, WronskianDefinitionIsProportionalToHhat) {
    for (int n : {0, 3, 4, 5, 8}) EXPECT_EQ(xop_polynomial(n), hhat(n) * Rational(8 * (n - 1) * (n - 2))) << n;
    EXPECT_THROW(xop_polynomial(1), gap_sequence_error);
    EXPECT_THROW(xop_polynomial(-3), domain_error);
}

TEST(Xop, WronskianOfTwoHermites) {
    // Wr(H1,H2) = H1 H2' - H1' H2 = 8x^2 + 4
    EXPECT_EQ(wronskian_poly({hermite(1), hermite(2)}), poly({4, 0, 8}));
}

TEST(Family, GapsAndAdmissibility) {
    const XopFamily f;
    EXPECT_EQ(f.gaps, (GapSequence{1, 2}));
    EXPECT_TRUE(f.admissible());
    EXPECT_TRUE(f.allows(0));
    EXPECT_FALSE(f.allows(1));
    EXPECT_FALSE(f.allows(2));
    EXPECT_TRUE(f.allows(3));
}

TEST(Norms, ClosedFormValues) {
    EXPECT_EQ(norm_prefactor(3, NormKind::hhat), Rational(24));
    EXPECT_NEAR(norm_squared(3), 24 * kSqrtPi, 1e-12);
    EXPECT_EQ(norm_prefactor(0, NormKind::hhat), Rational(1, 2));
    EXPECT_EQ(norm_prefactor(3, NormKind::xop), Rational(32 * 6 * 2));
    EXPECT_THROW(norm_squared(2), gap_sequence_error);
}

TEST(Weight, RelationBetweenWeights) {
    for (double x : {0.0, 0.7, -2.1}) EXPECT_NEAR(weight_hhat(x), 16 * weight(x), 1e-15);
    EXPECT_NEAR(weight(0), 1.0 / 16, 1e-16);
}

TEST(Potential, ValueAndPoles) {
    EXPECT_NEAR(potential(Complex(1)).real(), 17.0 / 9, 1e-15);
    EXPECT_NEAR(potential(Complex(0)).real(), -8.0, 1e-15);
    EXPECT_THROW(potential(Complex(0, 1 / std::sqrt(2.0))), singularity_error);
}
