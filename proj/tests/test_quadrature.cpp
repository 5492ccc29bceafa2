#include <gtest/gtest.h>

#include <xherm/differentiation.hpp>
#include <xherm/exceptional.hpp>
#include <xherm/quadrature.hpp>

using namespace xherm;

TEST(RealQuadrature, Polynomial) {
    EXPECT_NEAR(integrate_real([](double x) { return x * x; }, -1, 1).value, 2.0 / 3, 1e-14);
}

TEST(RealQuadrature, WeightedNorms) {
    auto r = integrate_real_weighted([](double) { return 1.0; }, WeightKind::hhat);
    EXPECT_NEAR(r.value, kSqrtPi / 2, 1e-12);
    const RationalPoly h = hhat(3);
    auto n3 = integrate_real_weighted([&](double x) { const double v = h.eval(x); return v * v; }, WeightKind::hhat);
    EXPECT_NEAR(n3.value / norm_squared(3), 1, 1e-11);
    auto w = integrate_real_weighted([](double) { return 16.0; }, WeightKind::xop);
    EXPECT_NEAR(w.value, r.value, 1e-12);
}

TEST(PathQuadrature, EntireFunction) {
    const Complex a(0.2, -0.4), b(1.5, 2.0);
    auto r = integrate_path([](Complex z) { return std::exp(z); }, {a, b});
    EXPECT_NEAR(std::abs(r.value - (std::exp(b) - std::exp(a))), 0, 1e-12 * std::abs(std::exp(b)));
    EXPECT_EQ(integrate_path([](Complex z) { return z; }, {a, a}).value, Complex(0));
}

TEST(PathQuadrature, ReportsNonConvergence) {
    PathQuadOptions opt;
    opt.max_panels = 4;
    EXPECT_THROW(integrate_path([](Complex z) { return std::exp(Complex(0, 400) * z); }, {Complex(0), Complex(3)}, opt),
                 convergence_error);
}

TEST(Differentiation, HolomorphicFunction) {
    auto f = [](Complex z) { return std::sin(z) * z; };
    const Complex z(0.7, -0.3);
    EXPECT_NEAR(std::abs(holomorphic_derivative(f, z) - (std::cos(z) * z + std::sin(z))), 0, 1e-9);
    EXPECT_NEAR(std::abs(antiholomorphic_derivative(f, z)), 0, 1e-9);
}

TEST(Differentiation, ConjugateIsAntiholomorphic) {
    auto f = [](Complex z) { return std::conj(z) * std::conj(z); };
    const Complex z(0.4, 0.9);
    EXPECT_NEAR(std::abs(holomorphic_derivative(f, z)), 0, 1e-9);
    EXPECT_NEAR(std::abs(antiholomorphic_derivative(f, z) - 2.0 * std::conj(z)), 0, 1e-9);
}
