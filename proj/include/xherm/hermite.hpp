#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational_poly.hpp"
#include "special_functions.hpp"

namespace xherm {

/// Value with first and second derivative at a point.
struct Jet {
    Complex f;
    Complex d1;
    Complex d2;
};

/// Evaluable analytic function plus a symbolic tag.
struct AnalyticFn {
    std::string tag;
    std::function<Jet(Complex)> jet;

    Complex operator()(Complex z) const { return jet(z).f; }
};

/// Classical (physicists') Hermite polynomial H_n by the three-term recurrence.
inline RationalPoly hermite(int n) {
    if (n < 0) throw domain_error("hermite: negative index (use hermite_negative)");
    RationalPoly prev(1);
    if (n == 0) return prev;
    RationalPoly cur = RationalPoly::monomial(2, 1);
    const RationalPoly two_x = RationalPoly::monomial(2, 1);
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    for (int k = 1; k < n; ++k) {
        RationalPoly next = two_x * cur - prev * Rational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// All H_0..H_n.
inline std::vector<RationalPoly> hermite_table(int n) {
    std::vector<RationalPoly> t;
    t.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        if (k < 2)
            t.push_back(hermite(k));
        else
            t.push_back(RationalPoly::monomial(2, 1) * t[k - 1] - t[k - 2] * Rational(2 * (k - 1)));
    }
    return t;
}

/// H_n' = 2n H_{n-1}.
inline RationalPoly hermite_derivative(int n) {
    if (n <= 0) throw domain_error("hermite_derivative: requires n >= 1");
    return hermite(n - 1) * Rational(2 * n);
}

/// Rodrigues form (-1)^n e^{x^2} d^n/dx^n e^{-x^2}; cross-check only.
inline RationalPoly hermite_rodrigues(int n) {
    if (n < 0 || n > 8) throw domain_error("hermite_rodrigues: supported for 0 <= n <= 8");
    RationalPoly p(1);
    const RationalPoly two_x = RationalPoly::monomial(2, 1);
    for (int k = 0; k < n; ++k) p = p.derivative() - two_x * p;
    return n % 2 ? -p : p;
}

namespace detail {

inline void check_exp_range(Complex z) {
    if (std::abs((z * z).real()) > 708.0)
        throw overflow_error("exp(z^2) leaves the double range at z = (" + std::to_string(z.real()) + "," +
                             std::to_string(z.imag()) + ")");
}

// u = e^{z^2} erfc(z) with u' = 2zu - 2/sqrt(pi), u'' = 2u + 2zu'.
inline Jet erfc_scaled_jet(Complex z) {
    detail::check_exp_range(z);
    const Complex u = erfc_scaled(z);
    const Complex u1 = 2.0 * z * u - 2.0 / kSqrtPi;
    const Complex u2 = 2.0 * u + 2.0 * z * u1;
    return {u, u1, u2};
}

}  // namespace detail

/// H_{-1}(z) = (sqrt(pi)/2) e^{z^2} (1 - erf z).
inline Complex hermite_negative(Complex z) {
    detail::check_exp_range(z);
    return 0.5 * kSqrtPi * erfc_scaled(z);
}

inline Jet hhat_gap_jet(int n, Complex z) {
    const Jet u = detail::erfc_scaled_jet(z);
    if (n == 1) {
        // 4z + sqrt(pi)(1 - 2z^2) u
        const Complex q = 1.0 - 2.0 * z * z;
        const Complex q1 = -4.0 * z;
        const Complex q2 = -4.0;
        return {4.0 * z + kSqrtPi * q * u.f, 4.0 + kSqrtPi * (q1 * u.f + q * u.d1),
                kSqrtPi * (q2 * u.f + 2.0 * q1 * u.d1 + q * u.d2)};
    }
    if (n == 2) {
        // 2 + 4z^2 + 4 sqrt(pi) z u
        return {2.0 + 4.0 * z * z + 4.0 * kSqrtPi * z * u.f, 8.0 * z + 4.0 * kSqrtPi * (u.f + z * u.d1),
                8.0 + 4.0 * kSqrtPi * (2.0 * u.d1 + z * u.d2)};
    }
    throw domain_error("hhat_gap: defined only for n in {1,2}");
}

/// Non-polynomial solutions on the gap sequence, Hhat_1 and Hhat_2.
inline Complex hhat_gap(int n, Complex z) { return hhat_gap_jet(n, z).f; }

inline AnalyticFn hhat_gap_fn(int n) {
    if (n != 1 && n != 2) throw domain_error("hhat_gap: defined only for n in {1,2}");
    return {n == 1 ? "Hhat_1" : "Hhat_2", [n](Complex z) { return hhat_gap_jet(n, z); }};
}

inline AnalyticFn hermite_negative_fn() {
    return {"H_-1", [](Complex z) {
                const Jet u = detail::erfc_scaled_jet(z);
                const double s = 0.5 * kSqrtPi;
                return Jet{s * u.f, s * u.d1, s * u.d2};
            }};
}

/// Jet of an exact polynomial at z.
inline Jet poly_jet(const RationalPoly& p, Complex z) {
    RationalPoly d1 = p.derivative();
    return {p.eval(z), d1.eval(z), d1.derivative().eval(z)};
}

}  // namespace xherm
