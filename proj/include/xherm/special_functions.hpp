#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace xherm {

using Complex = std::complex<double>;

inline constexpr double kSqrtPi = 1.7724538509055160273;

namespace detail {

// Maclaurin series of erf, summed in extended precision.
inline Complex erf_maclaurin(Complex z) {
    using LC = std::complex<long double>;
    const LC zl(z.real(), z.imag());
    const LC mz2 = -zl * zl;
    LC term = zl;
    LC sum = zl;
    for (int k = 1; k < 200; ++k) {
        term *= mz2 / static_cast<long double>(k);
        LC add = term / static_cast<long double>(2 * k + 1);
        sum += add;
        if (std::abs(add) <= 1e-21L * std::abs(sum)) break;
    }
    const long double f = 1.1283791670955125738961589031215452L;
    LC r = f * sum;
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace detail

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
/// Taylor / continued-fraction scheme of Poppe and Wijers (ACM TOMS 680).
inline Complex faddeeva(Complex z) {
    const double factor = 1.12837916709551257388;
    const double xi = z.real(), yi = z.imag();
    const double xabs = std::abs(xi), yabs = std::abs(yi);
    const double x = xabs / 6.3, y = yabs / 4.4;
    if (!std::isfinite(xabs) || !std::isfinite(yabs)) throw domain_error("faddeeva: non-finite argument");

    double qrho = x * x + y * y;
    const double xabsq = xabs * xabs;
    double xquad = xabsq - yabs * yabs;
    const double yquad = 2 * xabs * yabs;
    const bool a = qrho < 0.085264;
    double u = 0, v = 0, u2 = 0, v2 = 0;

    if (a) {
        qrho = (1 - 0.85 * y) * std::sqrt(qrho);
        int n = static_cast<int>(std::lround(6 + 72 * qrho));
        int j = 2 * n + 1;
        double xsum = 1.0 / j, ysum = 0;
        for (int i = n; i >= 1; --i) {
            j -= 2;
            double xaux = (xsum * xquad - ysum * yquad) / i;
            ysum = (xsum * yquad + ysum * xquad) / i;
            xsum = xaux + 1.0 / j;
        }
        const double u1 = -factor * (xsum * yabs + ysum * xabs) + 1.0;
        const double v1 = factor * (xsum * xabs - ysum * yabs);
        const double daux = std::exp(-xquad);
        u2 = daux * std::cos(yquad);
        v2 = -daux * std::sin(yquad);
        u = u1 * u2 - v1 * v2;
        v = u1 * v2 + v1 * u2;
    } else {
        double h = 0, h2 = 0, qlambda = 0;
        int kapn = 0, nu = 0;
        if (qrho > 1.0) {
            qrho = std::sqrt(qrho);
            nu = static_cast<int>(3 + 1442 / (26 * qrho + 77));
        } else {
            qrho = (1 - y) * std::sqrt(1 - qrho);
            h = 1.88 * qrho;
            h2 = 2 * h;
            kapn = static_cast<int>(std::lround(7 + 34 * qrho));
            nu = static_cast<int>(std::lround(16 + 26 * qrho));
        }
        const bool b = h > 0;
        if (b) qlambda = std::pow(h2, kapn);
        double rx = 0, ry = 0, sx = 0, sy = 0;
        for (int n = nu; n >= 0; --n) {
            const double np1 = n + 1;
            double tx = yabs + h + np1 * rx;
            double ty = xabs - np1 * ry;
            const double c = 0.5 / (tx * tx + ty * ty);
            rx = c * tx;
            ry = c * ty;
            if (b && n <= kapn) {
                tx = qlambda + sx;
                sx = rx * tx - ry * sy;
                sy = ry * tx + rx * sy;
                qlambda /= h2;
            }
        }
        if (h == 0) {
            u = factor * rx;
            v = factor * ry;
        } else {
            u = factor * sx;
            v = factor * sy;
        }
        if (yabs == 0) u = std::exp(-xabs * xabs);
    }

    if (yi < 0) {
        if (a) {
            u2 *= 2;
            v2 *= 2;
        } else {
            xquad = -xquad;
            if (xquad > 708.0) throw overflow_error("faddeeva: result overflows double range");
            const double w1 = 2 * std::exp(xquad);
            u2 = w1 * std::cos(yquad);
            v2 = -w1 * std::sin(yquad);
        }
        u = u2 - u;
        v = v2 - v;
        if (xi > 0) v = -v;
    } else if (xi < 0) {
        v = -v;
    }
    return {u, v};
}

/// exp(z^2) erfc(z), free of the cancellation in 1 - erf(z).
inline Complex erfc_scaled(Complex z) { return faddeeva(Complex(-z.imag(), z.real())); }

/// Radius inside which erf is summed from its Maclaurin series.
inline constexpr double kErfSeriesRadius = 3.0;

/// Error function on the complex plane; odd and conjugation-symmetric.
inline Complex erf(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw domain_error("erf: non-finite argument");
    if (std::abs(z) <= kErfSeriesRadius) return detail::erf_maclaurin(z);
    if (z.real() < 0) return -erf(-z);
    // Re z >= 0: erf = 1 - exp(-z^2) w(iz)
    const Complex mz2 = -z * z;
    if (mz2.real() > 708.0) throw overflow_error("erf: exp(-z^2) overflows");
    return 1.0 - std::exp(mz2) * erfc_scaled(z);
}

inline Complex erfc(Complex z) { return 1.0 - erf(z); }

/// Imaginary error function, erfi(z) = -i erf(iz).
inline Complex erfi(Complex z) { return Complex(0, -1) * erf(Complex(-z.imag(), z.real())); }

/// Accuracy of erf degrades once |Im z| exceeds this (exp(y^2) amplification).
inline bool erf_precision_degraded(Complex z) { return std::abs(z.imag()) > 8.0; }

/// (a)_k = a(a+1)...(a+k-1).
inline double pochhammer(double a, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

struct HypergeometricSpec {
    double a1, a2;
    double b1, b2;
    Complex z;
};

struct Hyp2F2Result {
    Complex value;
    double tail_estimate;
    int terms;
};

inline constexpr int kHypTermCap = 300;

/// 2F2(a1,a2;b1,b2;z) by direct summation with Neumaier-compensated accumulation.
inline Hyp2F2Result hyp2f2(const HypergeometricSpec& s) {
    for (double b : {s.b1, s.b2})
        if (b <= 0 && b == std::floor(b))
            throw domain_error("hyp2f2: lower parameter is a non-positive integer");
    Complex sum = 1, comp = 0, term = 1;
    auto add = [&](Complex t) {
        Complex nsum = sum + t;
        for (int part = 0; part < 2; ++part) {
            double sv = part ? sum.imag() : sum.real();
            double tv = part ? t.imag() : t.real();
            double nv = part ? nsum.imag() : nsum.real();
            double c = std::abs(sv) >= std::abs(tv) ? (sv - nv) + tv : (tv - nv) + sv;
            if (part)
                comp.imag(comp.imag() + c);
            else
                comp.real(comp.real() + c);
        }
        sum = nsum;
    };
    double prev_abs = 1;
    for (int k = 0; k < kHypTermCap; ++k) {
        term *= (s.a1 + k) * (s.a2 + k) / ((s.b1 + k) * (s.b2 + k) * (k + 1.0)) * s.z;
        add(term);
        const double ta = std::abs(term);
        const double total = std::abs(sum + comp);
        // past the peak, the remaining tail is bounded by a geometric series in the term ratio
        const double ratio = prev_abs > 0 ? ta / prev_abs : 0;
        prev_abs = ta;
        if (ta == 0) return {sum + comp, 0.0, k + 1};
        if (ratio < 0.5 && ta * ratio / (1 - ratio) <= 1e-16 * std::max(total, 1e-300))
            return {sum + comp, ta * ratio / (1 - ratio), k + 1};
    }
    throw convergence_error("hyp2f2: no convergence within " + std::to_string(kHypTermCap) + " terms",
                            std::abs(term), std::abs(sum + comp));
}

inline Complex hyp2f2(double a1, double a2, double b1, double b2, Complex z) {
    return hyp2f2(HypergeometricSpec{a1, a2, b1, b2, z}).value;
}

/// Gamma(m/2) for integer m; exact sqrt(pi) multiples at half-integers.
inline double gamma_half_integer(int m) {
    if (m <= 0 && m % 2 == 0) throw domain_error("gamma_half_integer: pole at " + std::to_string(m) + "/2");
    if (m % 2 == 0) {
        double r = 1;
        for (int k = 2; k < m / 2; ++k) r *= k;
        return r;
    }
    // Gamma(1/2) = sqrt(pi), Gamma(x+1) = x Gamma(x)
    double r = kSqrtPi;
    if (m > 0) {
        for (int k = 1; k < m; k += 2) r *= k / 2.0;
    } else {
        for (int k = 1; k > m; k -= 2) r /= (k - 2) / 2.0;
    }
    return r;
}

}  // namespace xherm
