#include <gtest/gtest.h>

#include <xherm/weierstrass.hpp>

using namespace xherm;

TEST(Chi, ValueAtOrigin) {
    const auto p = WeierstrassParams::figure_defaults(1);
    EXPECT_NEAR(std::abs(chi(p, Complex(0)) - (-2 / kSqrtPi)), 0, 1e-15);
    EXPECT_EQ(chi(WeierstrassParams::figure_defaults(0), Complex(0.3, 0.2)), Complex(0));
}

TEST(Chi, PoleIsRejected) {
    const auto p = WeierstrassParams::figure_defaults(3);
    EXPECT_THROW(chi(p, Complex(0, 1 / std::sqrt(2.0))), singularity_error);
    EXPECT_THROW(eta_log_derivative(Complex(0, -1 / std::sqrt(2.0))), singularity_error);
}

TEST(Chi, SpectralRelation) {
    for (int n : {1, 3, 7}) {
        const auto p = WeierstrassParams::figure_defaults(n);
        for (Complex z : {Complex(0.3, 0.1), Complex(-0.8, 0.5), Complex(0.9, -0.9)}) {
            const Complex v = -p.spectral_lambda * eta_squared(p, z) * chi_derivative(p, z);
            EXPECT_NEAR(std::abs(v - 2.0 * n), 0, 1e-12 * n) << n << " " << z;
        }
    }
}

TEST(Eta, OverflowGuard) {
    EXPECT_THROW(eta_squared(WeierstrassParams::figure_defaults(1), Complex(30, 0)), overflow_error);
}

TEST(PotentialMatrix, TracelessNilpotent) {
    const auto p = WeierstrassParams::figure_defaults(3);
    const Complex z(0.3, 0.2);
    const FrameMatrix u = potential_matrix(p, z);
    EXPECT_EQ(u.trace(), Complex(0));
    EXPECT_LE(std::abs(u.det()), 1e-12 * std::norm(u.m11));
}

TEST(PotentialMatrix, ExpandedFormIsUniformMultiple) {
    // the weight-based components carry 16/W where lambda eta^2 = lambda c1^2/(16 W)
    for (int n : {1, 3}) {
        const auto p = WeierstrassParams::figure_defaults(n);
        const Complex z(0.3, 0);
        const FrameMatrix a = potential_matrix(p, z), b = potential_matrix_expanded(p, z);
        EXPECT_NEAR(std::abs(b.m11 / a.m11 - 256.0), 0, 1e-12);
        EXPECT_NEAR(std::abs(b.m12 / a.m12 - 256.0), 0, 1e-12);
        EXPECT_NEAR(std::abs(b.m21 / a.m21 - 256.0), 0, 1e-12);
    }
}

TEST(Su2, NormEqualsSquaredRadius) {
    const auto p = WeierstrassParams::figure_defaults(3);
    const auto I = immersion_integrals(p, Complex(0.4, -0.6));
    const FrameMatrix m = su2_from_integrals(I);
    const auto f = point_from_integrals(I).f;
    const double r2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
    EXPECT_EQ(m.trace(), Complex(0));
    EXPECT_LT(m.anti_hermitian_defect(), 1e-15);
    EXPECT_NEAR(m.half_neg_trace_square().real(), r2, 1e-12 * r2);
    EXPECT_NEAR(m.half_neg_trace_square().imag(), 0, 1e-12 * r2);
}

TEST(Immersion, ClosedFormsMatchDirectQuadrature) {
    for (int n : {0, 1, 2, 3, 7}) {
        const Immersion imm(WeierstrassParams::figure_defaults(n));
        EXPECT_TRUE(imm.closed_form_active()) << n;
        for (Complex xi : {Complex(0.5, 0.25), Complex(-0.9, -0.8)}) {
            const auto a = point_from_integrals(imm.integrals(xi)).f;
            const auto b = point_from_integrals(imm.integrals_direct(xi)).f;
            const double mag = std::max(1.0, std::hypot(b[0], b[1], b[2]));
            for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[k], b[k], 1e-9 * mag) << n << " " << xi << " " << k;
        }
    }
}

TEST(Immersion, BasePointIsOrigin) {
    const auto p = WeierstrassParams::figure_defaults(3);
    const auto f = immersion_point(p, p.xi0).f;
    EXPECT_EQ(f, (std::array<double, 3>{0, 0, 0}));
}

TEST(Immersion, AsPrintedChiDisablesClosedForms) {
    auto p = WeierstrassParams::figure_defaults(3);
    p.chi_form = ChiForm::as_printed;
    const Immersion imm(p);
    EXPECT_FALSE(imm.closed_form_active());
}

TEST(Immersion, PrintedBracketsFitNeitherChi) {
    const auto r = check_printed_brackets(WeierstrassParams::figure_defaults(3));
    EXPECT_FALSE(r.consistent(1e-6));
}

TEST(Mesh, CornersMatchPointwiseImmersion) {
    const auto p = WeierstrassParams::figure_defaults(3);
    const MeshDomain d{};
    const SurfaceMesh m = generate_mesh(p, d, 2, 2);
    ASSERT_EQ(m.points.size(), 4u);
    const Complex corners[4] = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
    for (int c = 0; c < 4; ++c) {
        const auto want = immersion_point(p, corners[c]).f;
        const auto& got = m.points[static_cast<std::size_t>(c)];
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(got[k], want[k], 1e-9 * std::max(1.0, std::abs(want[k])));
    }
}

TEST(Mesh, PlaneForIndexZero) {
    const SurfaceMesh m = generate_mesh(WeierstrassParams::figure_defaults(0), MeshDomain{}, 9, 9);
    for (const auto& v : m.points) EXPECT_EQ(v[2], 0.0);
}

TEST(Mesh, ThreadCountDoesNotChangeResult) {
    const Immersion imm(WeierstrassParams::figure_defaults(2));
    const SurfaceMesh a = generate_mesh(imm, MeshDomain{}, 11, 9, 1);
    const SurfaceMesh b = generate_mesh(imm, MeshDomain{}, 11, 9, 4);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.error, b.error);
}

TEST(Mesh, RejectsBadGrid) {
    const auto p = WeierstrassParams::figure_defaults(1);
    EXPECT_THROW(generate_mesh(p, MeshDomain{}, 1, 5), domain_error);
    EXPECT_THROW(generate_mesh(p, MeshDomain{1, -1, -1, 1}, 5, 5), domain_error);
}

TEST(Mesh, VertexErrorCarriesPosition) {
    const auto p = WeierstrassParams::figure_defaults(1);
    const MeshDomain d{26, 28, -0.5, 0.5};
    try {
        generate_mesh(p, d, 3, 3);
        FAIL() << "no vertex_error";
    } catch (const vertex_error& e) {
        EXPECT_GE(e.i(), 0);
        EXPECT_LT(e.i(), 3);
        EXPECT_GE(e.j(), 0);
        EXPECT_LT(e.j(), 3);
    }
}

TEST(Wavefunction, FirstComponentSolvesOde) {
    const auto p = WeierstrassParams::figure_defaults(3);
    const Complex z(0.2, 0.4);
    const Wavefunction w = wavefunction(p, 1.0, 0.0, z);
    const Complex q = 1.0 + 2.0 * z * z;
    const Complex res = w.d2psi1 - 2.0 * (z + 4.0 * z / q) * w.dpsi1 + 6.0 * w.psi1;
    EXPECT_NEAR(std::abs(res), 0, 1e-12);
    EXPECT_EQ(w.truncation_error, 0.0);
    EXPECT_GT(wavefunction(p, 0.0, 1.0, z).truncation_error, 0.0);
}

TEST(Mirror, PredictionForRealParameters) {
    const Immersion imm(WeierstrassParams::figure_defaults(3));
    const MirrorPrediction mp = predict_mirror(imm);
    EXPECT_TRUE(mp.applicable);
    EXPECT_NEAR(mp.c, 12.789693, 1e-5);
    EXPECT_EQ(mp.f1_shift, 0.0);
    EXPECT_EQ(mp.f3_shift, 0.0);
}
