#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "differentiation.hpp"
#include "errors.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "special_functions.hpp"

namespace xherm {

/// Which form of chi to use. `associated` satisfies -lambda eta^2 dchi = 2n;
/// `as_printed` omits the factor z in the last term and is kept for comparison.
enum class ChiForm { associated, as_printed };

struct WeierstrassParams {
    int n = 0;
    Complex spectral_lambda{kSqrtPi, 0};
    Complex c1{1, 0};
    Complex c2{1, 0};
    Complex xi0{1, 3};
    ChiForm chi_form = ChiForm::associated;

    /// c1 = c2 = 1, lambda = sqrt(pi), xi0 = 1+3i.
    static WeierstrassParams figure_defaults(int n) {
        WeierstrassParams p;
        p.n = n;
        return p;
    }

    void validate() const {
        if (n < 0) throw domain_error("WeierstrassParams: n must be non-negative");
        if (c1 == Complex(0)) throw domain_error("WeierstrassParams: c1 must be nonzero");
        if (spectral_lambda == Complex(0)) throw domain_error("WeierstrassParams: lambda must be nonzero");
    }

    /// -2n/(lambda c1^2)
    Complex chi_scale() const { return -2.0 * static_cast<double>(n) / (spectral_lambda * c1 * c1); }
};

namespace detail {

inline void check_pole(Complex z) {
    if (std::abs(1.0 + 2.0 * z * z) < 1e-14) throw singularity_error("pole at z = +-i/sqrt(2)");
}

inline Complex exp_checked(Complex w) {
    if (w.real() > 700.0) throw overflow_error("exponential overflows double range");
    return std::exp(w);
}

// P = e^{z^2}(1+2z^2)^2
inline Complex p_weight(Complex z) {
    const Complex q = 1.0 + 2.0 * z * z;
    return exp_checked(z * z) * q * q;
}

// sqrt(pi) erfi(z) + e^{z^2} z (2z^2 - 1), an antiderivative of P
inline Complex v_bracket(Complex z) {
    return kSqrtPi * erfi(z) + exp_checked(z * z) * z * (2.0 * z * z - 1.0);
}

}  // namespace detail

inline Complex eta_squared(const WeierstrassParams& p, Complex z) {
    if ((z * z).real() > 700.0) throw overflow_error("eta_squared: Re(z^2) > 700");
    return p.c1 * p.c1 * detail::p_weight(z);
}

/// eta'/eta = z + 4z/(1+2z^2).
inline Complex eta_log_derivative(Complex z) {
    detail::check_pole(z);
    return z + 4.0 * z / (1.0 + 2.0 * z * z);
}

/// Bracket b(z) with chi = -2n/(lambda c1^2) b(z).
inline Complex chi_bracket(const WeierstrassParams& p, Complex z) {
    detail::check_pole(z);
    const Complex tail = detail::exp_checked(-z * z) / (2.0 * (1.0 + 2.0 * z * z));
    const Complex last = p.chi_form == ChiForm::associated ? z * tail : tail;
    return p.c2 + 0.25 * kSqrtPi * erf(z) + last;
}

inline Complex chi(const WeierstrassParams& p, Complex z) { return p.chi_scale() * chi_bracket(p, z); }

/// Analytic d chi/dz.
inline Complex chi_derivative(const WeierstrassParams& p, Complex z) {
    detail::check_pole(z);
    const Complex q = 1.0 + 2.0 * z * z;
    const Complex e = detail::exp_checked(-z * z);
    if (p.chi_form == ChiForm::associated) return p.chi_scale() * e / (q * q);
    return p.chi_scale() * e * (q * q - 2.0 * z * q - 4.0 * z) / (2.0 * q * q);
}

struct ImmersionIntegrals {
    Complex i1{0}, i2{0}, i3{0};
    double error = 0;
};

/// Position in E^3 with the propagated error estimate.
struct ImmersionPoint {
    std::array<double, 3> f{0, 0, 0};
    double error = 0;
};

/// (Re(I1-I2)/2, -Im(I1+I2)/2, Re I3)
inline ImmersionPoint point_from_integrals(const ImmersionIntegrals& I) {
    ImmersionPoint pt;
    pt.f = {0.5 * (I.i1 - I.i2).real(), -0.5 * (I.i1 + I.i2).imag(), I.i3.real()};
    pt.error = I.error;
    return pt;
}

enum class Algebra { sl2, su2 };

/// 2x2 complex matrix; m22 is stored as -m11 so the trace vanishes identically.
struct FrameMatrix {
    Complex m11{0}, m12{0}, m21{0}, m22{0};
    Algebra tag = Algebra::sl2;

    static FrameMatrix traceless(Complex a, Complex b, Complex c, Algebra tag) { return {a, b, c, -a, tag}; }
    Complex trace() const { return m11 + m22; }
    Complex det() const { return m11 * m22 - m12 * m21; }
    /// max |M + M^dagger| relative to max |M|.
    double anti_hermitian_defect() const {
        const double scale = std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22), 1e-300});
        const double d = std::max({std::abs(m11 + std::conj(m11)), std::abs(m22 + std::conj(m22)),
                                   std::abs(m12 + std::conj(m21))});
        return d / scale;
    }
    /// -Tr(M^2)/2
    Complex half_neg_trace_square() const { return -0.5 * (m11 * m11 + 2.0 * m12 * m21 + m22 * m22); }
};

/// -(i/2) [[I3+I3*, I1-I2*], [-I2+I1*, -(I3+I3*)]]
inline FrameMatrix su2_from_integrals(const ImmersionIntegrals& I) {
    const Complex f(0, -0.5);
    return FrameMatrix::traceless(f * (I.i3 + std::conj(I.i3)), f * (I.i1 - std::conj(I.i2)),
                                  f * (-I.i2 + std::conj(I.i1)), Algebra::su2);
}

/// lambda eta^2 [[chi, -1], [chi^2, -chi]]
inline FrameMatrix potential_matrix(const WeierstrassParams& p, Complex z) {
    detail::check_pole(z);
    const Complex le = p.spectral_lambda * eta_squared(p, z);
    const Complex c = chi(p, z);
    return FrameMatrix::traceless(le * c, -le, le * c * c, Algebra::sl2);
}

/// As written these come out 256 times potential_matrix.
/// Entries written through the weight W: u11 = -32n/W b, u12 = -16 lambda c1^2/W, u21 = 64n^2/(lambda c1^2 W) b^2.
inline FrameMatrix potential_matrix_expanded(const WeierstrassParams& p, Complex z) {
    detail::check_pole(z);
    const Complex q = 4.0 * (1.0 + 2.0 * z * z);
    const Complex w = detail::exp_checked(-z * z) / (q * q);
    const Complex b = chi_bracket(p, z);
    const double n = p.n;
    const Complex lc = p.spectral_lambda * p.c1 * p.c1;
    return FrameMatrix::traceless(-32.0 * n / w * b, -16.0 * lc / w, 64.0 * n * n / (lc * w) * b * b, Algebra::sl2);
}

/// Closed-form antiderivatives for the associated chi.
namespace antiderivative {

inline Complex f32(Complex z) { return hyp2f2(1, 1, 1.5, 2, -z * z); }

/// I1 / c1^2
inline Complex g1(Complex z) { return detail::v_bracket(z); }

/// I3 / (chi_scale c1^2): antiderivative of b(z) P(z)
inline Complex g3(Complex c2, Complex z) {
    const Complex z2 = z * z;
    return c2 * detail::v_bracket(z) + 0.25 * kSqrtPi * erf(z) * detail::v_bracket(z) - 0.5 * z2 * f32(z) + 0.5 * z2;
}

/// I2 / (chi_scale^2 c1^2), without the (pi/16) I4 remainder
inline Complex g2(Complex c2, Complex z) {
    const Complex z2 = z * z;
    const Complex v = detail::v_bracket(z);
    const Complex e = erf(z);
    return c2 * c2 * v + 0.5 * c2 * kSqrtPi * e * v - c2 * z2 * f32(z) + c2 * z2 +
           kSqrtPi * e * (z2 * z2 / 8.0 + z2 / 8.0 - 3.0 / 32.0) +
           detail::exp_checked(-z2) * (z2 * z / 8.0 + 3.0 * z / 16.0);
}

/// e^{z^2}(2z^2+1)^2 erf^2(z)
inline Complex i4_integrand(Complex z) {
    const Complex e = erf(z);
    return detail::p_weight(z) * e * e;
}

/// Bracket of the by-parts reduction of I4; I4 = [reduced] + 2 int e^{z^2} erf^2.
inline Complex i4_reduced_bracket(Complex z) {
    const Complex e = erf(z);
    const Complex z2 = z * z;
    return e * e * detail::v_bracket(z) - kSqrtPi * e * e * erfi(z) -
           (4.0 * z2 * z2 - 4.0 * z2 - 1.0) * e / (2.0 * kSqrtPi) -
           detail::exp_checked(-z2) * (2.0 * z2 * z + z) / std::numbers::pi;
}

}  // namespace antiderivative

/// The long brackets for I2 and I3 transcribed as printed (for the discrepancy report only).
namespace as_printed {

inline Complex i2_bracket(Complex c2, Complex z) {
    const double sp = kSqrtPi;
    const Complex z2 = z * z, e = erf(z), ez = detail::exp_checked(z2), emz = detail::exp_checked(-z2);
    return c2 * c2 * sp * erfi(z) + sp / 6.0 * z2 * e + sp / 4.0 * z * e + sp / 8.0 * e -
           0.5 * c2 * z2 * hyp2f2(1, 1, -0.5, 2, z2) + c2 * sp * z2 * hyp2f2(1, 1, 0.5, 2, z2) +
           0.5 * c2 * sp * z2 * hyp2f2(1, 1, 1.5, 2, z2) - 0.5 * c2 * sp * z2 * z2 + 2.0 * c2 / 3.0 * z2 * z -
           0.5 * c2 * sp * z2 + c2 * z + 2.0 * c2 * c2 * z2 * z * ez - c2 * c2 * z * ez + z2 * emz / 6.0 +
           5.0 / 12.0 * emz;
}

/// Printed tail integrand e^{z^2}(2z^2+1) erf^2.
inline Complex i2_tail_integrand(Complex z) {
    const Complex e = erf(z);
    return detail::exp_checked(z * z) * (2.0 * z * z + 1.0) * e * e;
}

inline Complex i3_bracket(Complex c2, Complex z) {
    const Complex z2 = z * z;
    return c2 * kSqrtPi * erfi(z) + c2 * detail::exp_checked(z2) * z * (2.0 * z2 - 1.0) -
           0.25 * z2 * hyp2f2(1, 1, -0.5, 2, z2) + 0.5 * z2 * hyp2f2(1, 1, 0.5, 2, z2) +
           0.25 * z2 * hyp2f2(1, 1, 1.5, 2, z2) - 0.25 * z2 * z2 + z2 * z / 3.0 - 0.25 * z2 + 0.5 * z;
}

}  // namespace as_printed

/// Sample points for the derivative-consistency guard.
inline std::vector<Complex> consistency_samples() {
    return {{0.4, 0.1}, {-0.7, 0.35}, {0.15, -0.8}, {0.9, 0.9}, {-0.95, -0.6},
            {0.55, -0.25}, {-0.3, 0.75}, {0.05, 0.05}, {0.8, -0.95}, {-0.6, -0.1}};
}

struct ConsistencyReport {
    double i1 = 0, i2 = 0, i3 = 0;  // max relative mismatch
    bool pass = false;
};

/// Immersion for one parameter set. Closed forms are checked once, at construction.
class Immersion {
public:
    explicit Immersion(WeierstrassParams p, double consistency_tol = 1e-7) : p_(p) {
        p_.validate();
        report_ = check_closed_forms(consistency_tol);
    }

    const WeierstrassParams& params() const { return p_; }
    bool closed_form_active() const { return report_.pass; }
    const ConsistencyReport& consistency() const { return report_; }

    Complex eta2(Complex z) const { return eta_squared(p_, z); }
    Complex chi_at(Complex z) const { return chi(p_, z); }

    /// I1, I2, I3 from xi0 to xi.
    ImmersionIntegrals integrals(Complex xi, const PathQuadOptions& opt = {}) const {
        if (xi == p_.xi0) return {};
        if (!report_.pass) return integrals_direct(xi, opt);
        auto i4 = p_.n == 0 ? QuadResult<Complex>{} : integrate_path(antiderivative::i4_integrand, {p_.xi0, xi}, opt);
        return closed_with_i4(xi, i4);
    }

    /// I1, I2, I3 by straight-line quadrature of eta^2, chi^2 eta^2, chi eta^2.
    ImmersionIntegrals integrals_direct(Complex xi, const PathQuadOptions& opt = {}) const {
        if (xi == p_.xi0) return {};
        ImmersionIntegrals I;
        auto a = integrate_path([&](Complex z) { return eta2(z); }, {p_.xi0, xi}, opt);
        I.i1 = a.value;
        I.error = a.error;
        if (p_.n != 0) {
            auto c = integrate_path([&](Complex z) { return chi_at(z) * eta2(z); }, {p_.xi0, xi}, opt);
            auto b = integrate_path([&](Complex z) { const Complex x = chi_at(z); return x * x * eta2(z); },
                                    {p_.xi0, xi}, opt);
            I.i2 = b.value;
            I.i3 = c.value;
            I.error += b.error + c.error;
        }
        return I;
    }

    /// Closed forms, given I4 along the path from xi0 to xi.
    ImmersionIntegrals closed_with_i4(Complex xi, const QuadResult<Complex>& i4) const {
        ImmersionIntegrals I;
        const Complex c1sq = p_.c1 * p_.c1;
        I.i1 = c1sq * (antiderivative::g1(xi) - g1_0_);
        if (p_.n != 0) {
            const Complex s = p_.chi_scale();
            I.i3 = s * c1sq * (antiderivative::g3(p_.c2, xi) - g3_0_);
            const Complex k = s * s * c1sq;
            I.i2 = k * (antiderivative::g2(p_.c2, xi) - g2_0_) + k * (std::numbers::pi / 16.0) * i4.value;
            I.error = std::abs(k) * (std::numbers::pi / 16.0) * i4.error;
        }
        return I;
    }

    /// Integrand pieces accumulated along mesh edges: I4 when closed forms hold,
    /// otherwise (chi^2 eta^2, chi eta^2, eta^2) directly.
    int edge_channels() const { return report_.pass ? 1 : 3; }
    Complex edge_integrand(int channel, Complex z) const {
        if (report_.pass) return antiderivative::i4_integrand(z);
        const Complex e = eta2(z);
        if (channel == 2) return e;
        const Complex x = chi_at(z);
        return channel == 0 ? x * x * e : x * e;
    }
    ImmersionIntegrals from_edges(Complex xi, const std::vector<QuadResult<Complex>>& acc) const {
        if (report_.pass) return closed_with_i4(xi, acc[0]);
        ImmersionIntegrals I;
        I.i2 = p_.n ? acc[0].value : Complex(0);
        I.i3 = p_.n ? acc[1].value : Complex(0);
        I.i1 = acc[2].value;
        I.error = acc[0].error + acc[1].error + acc[2].error;
        return I;
    }

private:
    ConsistencyReport check_closed_forms(double tol) {
        g1_0_ = antiderivative::g1(p_.xi0);
        g2_0_ = antiderivative::g2(p_.c2, p_.xi0);
        g3_0_ = antiderivative::g3(p_.c2, p_.xi0);
        ConsistencyReport r;
        for (Complex z : consistency_samples()) {
            const Complex P = detail::p_weight(z);
            const Complex b = chi_bracket(p_, z);
            const Complex e = erf(z);
            auto rel = [](Complex got, Complex want) {
                return std::abs(got - want) / std::max(std::abs(want), 1e-300);
            };
            const double h = 1e-3;
            r.i1 = std::max(r.i1, rel(holomorphic_derivative(antiderivative::g1, z, h), P));
            r.i3 = std::max(r.i3, rel(holomorphic_derivative([&](Complex w) { return antiderivative::g3(p_.c2, w); }, z, h),
                                      b * P));
            const Complex g2d = holomorphic_derivative([&](Complex w) { return antiderivative::g2(p_.c2, w); }, z, h);
            r.i2 = std::max(r.i2, rel(g2d + (std::numbers::pi / 16.0) * P * e * e, b * b * P));
        }
        r.pass = r.i1 <= tol && r.i2 <= tol && r.i3 <= tol;
        return r;
    }

    WeierstrassParams p_;
    ConsistencyReport report_;
    Complex g1_0_, g2_0_, g3_0_;
};

inline ImmersionIntegrals immersion_integrals(const WeierstrassParams& p, Complex xi) {
    return Immersion(p).integrals(xi);
}

/// F(xi) assembled from I1, I2, I3.
inline ImmersionPoint immersion_point(const WeierstrassParams& p, Complex xi) {
    return point_from_integrals(immersion_integrals(p, xi));
}

inline FrameMatrix su2_matrix(const WeierstrassParams& p, Complex xi) {
    return su2_from_integrals(immersion_integrals(p, xi));
}

/// Mismatch of the printed I2 / I3 brackets against both chi forms.
struct PrintedBracketReport {
    double i2_vs_associated = 0, i2_vs_printed = 0;
    double i3_vs_associated = 0, i3_vs_printed = 0;
    bool consistent(double tol) const {
        return std::min(i2_vs_associated, i2_vs_printed) <= tol && std::min(i3_vs_associated, i3_vs_printed) <= tol;
    }
};

inline PrintedBracketReport check_printed_brackets(WeierstrassParams p) {
    if (p.n == 0) p.n = 1;
    PrintedBracketReport r;
    const Complex c1sq = p.c1 * p.c1;
    const Complex k2 = 4.0 * static_cast<double>(p.n * p.n) / (p.spectral_lambda * p.spectral_lambda * c1sq);
    const Complex k4 = static_cast<double>(p.n * p.n) * std::numbers::pi / (4.0 * p.spectral_lambda * p.spectral_lambda * c1sq);
    const Complex k3 = 2.0 * static_cast<double>(p.n) / p.spectral_lambda;
    for (Complex z : consistency_samples()) {
        const double h = 1e-3;
        const Complex d2 = k2 * holomorphic_derivative([&](Complex w) { return as_printed::i2_bracket(p.c2, w); }, z, h) +
                           k4 * as_printed::i2_tail_integrand(z);
        const Complex d3 = k3 * holomorphic_derivative([&](Complex w) { return as_printed::i3_bracket(p.c2, w); }, z, h);
        for (ChiForm form : {ChiForm::associated, ChiForm::as_printed}) {
            WeierstrassParams q = p;
            q.chi_form = form;
            const Complex e = eta_squared(q, z), x = chi(q, z);
            const double r2 = std::abs(d2 - x * x * e) / std::abs(x * x * e);
            const double r3 = std::abs(d3 - x * e) / std::abs(x * e);
            if (form == ChiForm::associated) {
                r.i2_vs_associated = std::max(r.i2_vs_associated, r2);
                r.i3_vs_associated = std::max(r.i3_vs_associated, r3);
            } else {
                r.i2_vs_printed = std::max(r.i2_vs_printed, r2);
                r.i3_vs_printed = std::max(r.i3_vs_printed, r3);
            }
        }
    }
    return r;
}

struct Wavefunction {
    Complex psi1{0}, psi2{0};
    Complex dpsi1{0}, d2psi1{0};
    double truncation_error = 0;
};

/// Psi1 = k1 alpha_n + k2 beta_n, Psi2 = chi Psi1 - Psi1'/(lambda eta^2).
inline Wavefunction wavefunction(const WeierstrassParams& p, Complex k1, Complex k2, Complex z, int K = -1) {
    detail::check_pole(z);
    if (K < 0) K = default_truncation(p.n);
    const Alpha a = alpha(p.n, K);
    const SeriesSolution b = beta(p.n, K);
    const Jet ja = a.jet(z), jb = b.jet(z);
    Wavefunction w;
    w.psi1 = k1 * ja.f + k2 * jb.f;
    w.dpsi1 = k1 * ja.d1 + k2 * jb.d1;
    w.d2psi1 = k1 * ja.d2 + k2 * jb.d2;
    w.psi2 = chi(p, z) * w.psi1 - w.dpsi1 / (p.spectral_lambda * eta_squared(p, z));
    w.truncation_error = std::abs(k2) * b.tail_bound(z, 0);
    return w;
}

struct MeshDomain {
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
};

/// nu x nv grid; vertex (i,j) sits at index j*nu + i (rows run along x).
struct SurfaceMesh {
    int nu = 0, nv = 0;
    MeshDomain domain;
    std::vector<double> x, y;
    std::vector<std::array<double, 3>> points;
    std::vector<double> error;
    std::vector<ImmersionIntegrals> integrals;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nu + i; }
    const std::array<double, 3>& at(int i, int j) const { return points[index(i, j)]; }
};

/// Raised when a vertex fails; carries the grid position.
class vertex_error : public std::runtime_error {
public:
    vertex_error(int i, int j, const std::string& why)
        : std::runtime_error("vertex (" + std::to_string(i) + "," + std::to_string(j) + "): " + why), i_(i), j_(j) {}
    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

private:
    int i_, j_;
};

/// Worker count from XHERM_THREADS; sequential when unset.
inline int threads_from_env() {
    const char* s = std::getenv("XHERM_THREADS");
    if (!s) return 1;
    const int v = std::atoi(s);
    return v > 0 ? v : 1;
}

/// Surface over a rectangular parameter grid, integrating edge by edge from xi0.
inline SurfaceMesh generate_mesh(const Immersion& imm, const MeshDomain& dom, int nu, int nv, int threads = 0,
                                 const PathQuadOptions& opt = {}) {
    if (nu < 2 || nv < 2) throw domain_error("generate_mesh: nu and nv must be at least 2");
    if (!(dom.x1 > dom.x0) || !(dom.y1 > dom.y0)) throw domain_error("generate_mesh: empty domain");
    if (threads <= 0) threads = threads_from_env();
    SurfaceMesh m;
    m.nu = nu;
    m.nv = nv;
    m.domain = dom;
    for (int i = 0; i < nu; ++i) m.x.push_back(dom.x0 + (dom.x1 - dom.x0) * i / (nu - 1));
    for (int j = 0; j < nv; ++j) m.y.push_back(dom.y0 + (dom.y1 - dom.y0) * j / (nv - 1));
    const std::size_t total = static_cast<std::size_t>(nu) * nv;
    m.points.resize(total);
    m.error.resize(total);
    m.integrals.resize(total);

    const int ch = imm.edge_channels();
    const Complex xi0 = imm.params().xi0;
    auto node = [&](int i, int j) { return Complex(m.x[i], m.y[j]); };
    using Acc = std::vector<QuadResult<Complex>>;
    auto step = [&](Acc& acc, Complex a, Complex b) {
        for (int c = 0; c < ch; ++c) {
            if (imm.params().n == 0 && ch == 1) continue;
            auto r = integrate_path([&](Complex z) { return imm.edge_integrand(c, z); }, {a, b}, opt);
            acc[c].value += r.value;
            acc[c].error += r.error;
        }
    };
    auto store = [&](int i, int j, const Acc& acc) {
        const Complex xi = node(i, j);
        ImmersionIntegrals I = xi == xi0 ? ImmersionIntegrals{} : imm.from_edges(xi, acc);
        ImmersionPoint pt = point_from_integrals(I);
        for (double v : pt.f)
            if (!std::isfinite(v)) throw vertex_error(i, j, "non-finite immersion value");
        const std::size_t k = m.index(i, j);
        m.points[k] = pt.f;
        m.error[k] = pt.error;
        m.integrals[k] = I;
    };

    // base pass along the first column, sequential
    std::vector<Acc> column(static_cast<std::size_t>(nv), Acc(static_cast<std::size_t>(ch)));
    int base = 0;
    try {
        Acc acc(static_cast<std::size_t>(ch));
        step(acc, xi0, node(0, 0));
        column[0] = acc;
        for (base = 1; base < nv; ++base) {
            step(acc, node(0, base - 1), node(0, base));
            column[static_cast<std::size_t>(base)] = acc;
        }
    } catch (const vertex_error&) {
        throw;
    } catch (const std::exception& e) {
        throw vertex_error(0, base, e.what());
    }

    auto do_row = [&](int j) {
        int i = 0;
        try {
            Acc acc = column[static_cast<std::size_t>(j)];
            store(0, j, acc);
            for (i = 1; i < nu; ++i) {
                step(acc, node(i - 1, j), node(i, j));
                store(i, j, acc);
            }
        } catch (const vertex_error&) {
            throw;
        } catch (const std::exception& e) {
            throw vertex_error(i, j, e.what());
        }
    };

    if (threads <= 1) {
        for (int j = 0; j < nv; ++j) do_row(j);
        return m;
    }
    std::vector<std::thread> pool;
    std::mutex mu;
    std::exception_ptr first;
    int failed_row = nv;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int j = t; j < nv; j += threads) {
                try {
                    do_row(j);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (j < failed_row) {
                        failed_row = j;
                        first = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
    return m;
}

inline SurfaceMesh generate_mesh(const WeierstrassParams& p, const MeshDomain& dom, int nu, int nv, int threads = 0) {
    return generate_mesh(Immersion(p), dom, nu, nv, threads);
}

/// Reflection of the parameter plane through the real axis maps F2 to 2C - F2 with this C,
/// provided c1, c2, lambda are real. Also returns the defects Re(K1-K2)/2 and Re K3.
struct MirrorPrediction {
    double c = 0;
    double f1_shift = 0;
    double f3_shift = 0;
    bool applicable = false;
};

inline MirrorPrediction predict_mirror(const Immersion& imm) {
    const auto& p = imm.params();
    MirrorPrediction mp;
    mp.applicable = p.c1.imag() == 0 && p.c2.imag() == 0 && p.spectral_lambda.imag() == 0;
    const ImmersionIntegrals K = imm.integrals(std::conj(p.xi0));
    mp.c = -0.25 * (K.i1 + K.i2).imag();
    mp.f1_shift = 0.5 * (K.i1 - K.i2).real();
    mp.f3_shift = K.i3.real();
    return mp;
}

}  // namespace xherm
