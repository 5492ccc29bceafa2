#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "errors.hpp"
#include "exceptional.hpp"

namespace xherm {

template <class T>
struct QuadResult {
    T value{};
    double error = 0;
};

struct RealQuadOptions {
    double half_width = 10.0;  // integrate over [-R, R]
    double rel_tol = 1e-12;
    int max_depth = 12;
};

/// Tanh-sinh on [a,b]; bisects while the estimate exceeds rel_tol times the L1 norm.
inline QuadResult<double> integrate_real(const std::function<double(double)>& f, double a, double b,
                                         double rel_tol = 1e-12, int max_depth = 12) {
    thread_local boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0, l1 = 0;
    const double v = ts.integrate(f, a, b, rel_tol, &err, &l1);
    if (err <= rel_tol * std::max(l1, 1e-300) || err <= 1e-300) return {v, err};
    if (max_depth <= 0)
        throw convergence_error("integrate_real: no convergence on [" + std::to_string(a) + "," + std::to_string(b) + "]",
                                v, err);
    const double m = 0.5 * (a + b);
    auto lo = integrate_real(f, a, m, rel_tol, max_depth - 1);
    auto hi = integrate_real(f, m, b, rel_tol, max_depth - 1);
    return {lo.value + hi.value, lo.error + hi.error};
}

enum class WeightKind { xop, hhat };

/// Integral of f(x) w(x) over the real line, truncated to [-R, R].
inline QuadResult<double> integrate_real_weighted(const std::function<double(double)>& f, WeightKind kind,
                                                  const RealQuadOptions& opt = {}) {
    auto g = [&](double x) { return f(x) * (kind == WeightKind::xop ? weight(x) : weight_hhat(x)); };
    const double r = opt.half_width;
    // split at the origin so symmetric integrands keep their structure
    auto lo = integrate_real(g, -r, 0.0, opt.rel_tol, opt.max_depth);
    auto hi = integrate_real(g, 0.0, r, opt.rel_tol, opt.max_depth);
    return {lo.value + hi.value, lo.error + hi.error};
}

struct PathSegment {
    Complex start;
    Complex end;
};

struct PathQuadOptions {
    double rel_tol = 1e-13;
    int max_panels = 4096;
};

namespace detail {

inline constexpr int kGaussPoints = 32;

// 32-point Gauss-Legendre over m equal panels; also returns sum |f| |dz| w.
inline Complex gauss_panels(const std::function<Complex(Complex)>& f, Complex a, Complex b, int m, double& l1) {
    using G = boost::math::quadrature::gauss<double, kGaussPoints>;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    const Complex h = (b - a) / static_cast<double>(m);
    Complex total = 0;
    l1 = 0;
    for (int p = 0; p < m; ++p) {
        const Complex mid = a + h * (p + 0.5);
        const Complex half = 0.5 * h;
        Complex s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const Complex fp = f(mid + half * x[i]);
            const Complex fm = f(mid - half * x[i]);
            s += (fp + fm) * w[i];
            l1 += (std::abs(fp) + std::abs(fm)) * w[i] * std::abs(half);
        }
        total += s * half;
    }
    return total;
}

}  // namespace detail

/// Straight-line integral of an entire function; panels double until two estimates agree.
inline QuadResult<Complex> integrate_path(const std::function<Complex(Complex)>& f, const PathSegment& seg,
                                          const PathQuadOptions& opt = {}) {
    if (seg.start == seg.end) return {Complex(0), 0.0};
    double l1 = 0;
    Complex prev = detail::gauss_panels(f, seg.start, seg.end, 1, l1);
    for (int m = 2; m <= opt.max_panels; m *= 2) {
        Complex cur = detail::gauss_panels(f, seg.start, seg.end, m, l1);
        const double diff = std::abs(cur - prev);
        if (diff <= opt.rel_tol * std::max(std::abs(cur), l1 * 1e-3) || diff == 0.0) return {cur, diff};
        prev = cur;
    }
    throw convergence_error("integrate_path: panel halving did not converge", std::abs(prev), l1);
}

}  // namespace xherm
