#include <gtest/gtest.h>

#include <xherm/verify.hpp>

using namespace xherm;

TEST(OdeResidual, ExactForPolynomials) {
    for (int n : {0, 3, 4, 9, 16}) EXPECT_TRUE(ode_residual_exact(hhat(n), n).is_zero()) << n;
    EXPECT_FALSE(ode_residual_exact(hhat(4), 5).is_zero());
}

TEST(OdeResidual, SeriesExactThroughTruncation) {
    const auto s = beta(5, 30);
    const RationalPoly r = ode_residual_exact(s.as_poly(), 5);
    EXPECT_GE(first_nonzero_degree(r, 60), 29);
}

TEST(OdeResidual, GapFunctions) {
    for (int n : {1, 2})
        for (Complex z : disc_samples(10, 2.0))
            EXPECT_LT(ode_residual_scaled(hhat_gap_jet(n, z), n, z), 1e-10) << n << " " << z;
}

TEST(OdeSuite, SmallRangePasses) {
    OdeSuiteOptions o;
    o.n_max = 6;
    o.samples = 6;
    const auto r = ode_suite(o);
    EXPECT_TRUE(r.pass()) << r.failures();
}

TEST(Samples, AvoidPoles) {
    for (Complex z : disc_samples(40, 2.0)) {
        EXPECT_LE(std::abs(z), 2.0 + 1e-12);
        EXPECT_GT(detail::dist_to_pole(z), 0.05);
    }
    const auto a = box_samples(20, MeshDomain{}), b = box_samples(20, MeshDomain{});
    EXPECT_EQ(a, b);
}

TEST(Wronskian, ConstantsAtSamplePoints) {
    for (int n : {1, 2, 3, 4, 7, 8})
        for (auto w : {WronskianPair::hhat_beta, WronskianPair::alpha_mu, WronskianPair::alpha_nu,
                       WronskianPair::alpha_beta}) {
            if (w == WronskianPair::hhat_beta && n < 3) continue;
            const Complex c = wronskian_constant(w, n);
            for (Complex z : {Complex(0.3, 0.2), Complex(-0.5, 0.6)}) {
                const auto s = wronskian_at(w, n, z);
                const double err = std::abs(s.normalized - c) / std::max({1.0, std::abs(c), s.term_scale});
                EXPECT_LT(err, 1e-8) << to_string(w) << " n=" << n << " z=" << z;
            }
        }
}

TEST(Wronskian, PrintedValuesDifferOnlyAtLowIndices) {
    EXPECT_NEAR(std::abs(wronskian_constant(WronskianPair::alpha_nu, 1) - kSqrtPi), 0, 1e-15);
    EXPECT_EQ(wronskian_constant_printed(WronskianPair::alpha_nu, 1), Complex(0));
    EXPECT_EQ(wronskian_constant(WronskianPair::alpha_nu, 4), wronskian_constant_printed(WronskianPair::alpha_nu, 4));
    const Complex sum = wronskian_constant(WronskianPair::alpha_mu, 2) + wronskian_constant(WronskianPair::alpha_nu, 2);
    EXPECT_NEAR(std::abs(sum - wronskian_constant(WronskianPair::alpha_beta, 2)), 0, 1e-14);
}

TEST(Wronskian, PrefactorOracle) {
    const PrefactorOracle o = prefactor_oracle(3, 30);
    EXPECT_EQ(o.mismatch_one, 2);
    EXPECT_GE(o.exact_through, 29);
    EXPECT_TRUE(o.mismatch_two == kZeroDegree || o.mismatch_two > o.exact_through);
}

TEST(Deltas, KnownValues) {
    EXPECT_EQ(delta::delta1(3), Rational(204));
    EXPECT_EQ(delta::delta7_as_printed(4, 0), Rational(34, 7));
    for (int k = 4; k <= 12; ++k) {
        EXPECT_EQ(delta::delta2(k), Rational(0)) << k;
        for (int n = 0; n <= 8; ++n) {
            EXPECT_EQ(delta::delta7(k, n), Rational(0));
            EXPECT_EQ(delta::delta8(k, n), Rational(0));
            EXPECT_EQ(delta::delta9(k, n), Rational(0));
            EXPECT_EQ(delta::delta10(k, n), Rational(0));
        }
    }
}

TEST(Gram, HhatDiagonal) {
    const GramReport g = gram_matrix(GramKind::hhat, {0, 3, 4, 5});
    EXPECT_TRUE(g.pass()) << g.max_diag_rel << " " << g.max_offdiag;
    EXPECT_NEAR(g.matrix[1][1], 24 * kSqrtPi, 1e-8 * 24 * kSqrtPi);
}

TEST(Gram, GapIndexRejected) {
    EXPECT_THROW(gram_matrix(GramKind::hhat, {0, 2}), gap_sequence_error);
}

TEST(Frame, ResidualsSmall) {
    for (int n : {0, 3}) {
        const auto p = WeierstrassParams::figure_defaults(n);
        const auto r = frame_residual(p, 1.0, 1.0, Complex(0.3, -0.4));
        EXPECT_LT(r.linear, 1e-7) << n;
        EXPECT_LT(r.second_order, 1e-7) << n;
        EXPECT_LT(r.antiholomorphic, 1e-7) << n;
    }
}

TEST(Association, Passes) {
    EXPECT_TRUE(association_suite(WeierstrassParams::figure_defaults(2), 6).pass());
}

TEST(Curvature, PlaneHasZeroMeanCurvature) {
    const SurfaceMesh m = generate_mesh(WeierstrassParams::figure_defaults(0), MeshDomain{}, 9, 9);
    const MinimalityReport r = minimality_check(m);
    EXPECT_LT(r.max_h, 1e-12);
    EXPECT_EQ(r.degenerate, 0u);
}

TEST(Curvature, RefinementNeedsHalvedStep) {
    const auto p = WeierstrassParams::figure_defaults(1);
    const SurfaceMesh a = generate_mesh(p, MeshDomain{}, 5, 5), b = generate_mesh(p, MeshDomain{}, 8, 8);
    EXPECT_THROW(refinement_ratio(a, b), domain_error);
}

TEST(Mirror, DetectsPlaneOnSymmetricGrid) {
    const Immersion imm(WeierstrassParams::figure_defaults(2));
    const SurfaceMesh m = generate_mesh(imm, MeshDomain{}, 7, 7);
    const MirrorReport r = mirror_check(m, predict_mirror(imm));
    EXPECT_TRUE(r.symmetric_grid);
    EXPECT_TRUE(r.is_plane(1e-9)) << r.defect;
    EXPECT_NEAR(r.c_numeric, r.c_predicted, 1e-9 * std::max(1.0, std::abs(r.c_predicted)));
}

TEST(Su2, ExactTraceOnMesh) {
    const SurfaceMesh m = generate_mesh(WeierstrassParams::figure_defaults(3), MeshDomain{}, 5, 5);
    const Su2Report r = su2_check(m);
    EXPECT_EQ(r.max_trace, 0.0);
    EXPECT_LT(r.max_anti_hermitian, 1e-12);
}
