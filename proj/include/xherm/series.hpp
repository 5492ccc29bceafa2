#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "exceptional.hpp"
#include "hermite.hpp"
#include "rational_poly.hpp"
#include "special_functions.hpp"

namespace xherm {

enum class SeriesKind { beta, mu, nu, alpha };

inline const char* to_string(SeriesKind k) {
    switch (k) {
        case SeriesKind::beta: return "beta";
        case SeriesKind::mu: return "mu";
        case SeriesKind::nu: return "nu";
        case SeriesKind::alpha: return "alpha";
    }
    return "?";
}

/// Truncation used when the caller does not pick one.
inline int default_truncation(int n) { return std::max(n + 10, 40); }

/// c_0..c_K of beta_n from the four-term recurrence.
inline std::vector<Rational> beta_coefficients(int n, int K) {
    if (K < 0) throw domain_error("beta_coefficients: K must be non-negative");
    std::vector<Rational> c(static_cast<std::size_t>(std::max(K, 3) + 1));
    c[0] = 1;
    c[1] = 1;
    c[2] = -n;
    c[3] = Rational(-(n - 5), 3);
    c[3].canonicalize();
    for (int k = 4; k <= K; ++k) {
        Rational num = Rational(-2 * ((k - 2) * (k - 8) + n)) * c[k - 2] - Rational(4 * (n - k + 4)) * c[k - 4];
        c[k] = num / (k * (k - 1));
        c[k].canonicalize();
    }
    c.resize(static_cast<std::size_t>(K + 1));
    return c;
}

namespace detail {

inline mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline mpz_class pow2(int e) {
    mpz_class r = 1;
    r <<= static_cast<mp_bitcnt_t>(e);
    return r;
}

}  // namespace detail

/// c_{2k} in closed form, k >= 2.
inline Rational closed_form_even(int n, int k) {
    if (k < 2) throw domain_error("closed_form_even: requires k >= 2");
    mpz_class num = mpz_class(n) * (n - ((2 * k - 1) * (2 * k - 1) + 1));
    for (int j = 1; j <= k - 2; ++j) num *= n - 2 * (1 + j);
    if (k % 2) num = -num;
    Rational r(num * detail::pow2(k), detail::factorial(2 * k));
    r.canonicalize();
    return r;
}

/// c_{2k-1} in closed form, k >= 2.
inline Rational closed_form_odd(int n, int k) {
    if (k < 2) throw domain_error("closed_form_odd: requires k >= 2");
    mpz_class num = mpz_class(n - ((2 * (k - 1)) * (2 * (k - 1)) + 1));
    for (int j = 1; j <= k - 2; ++j) num *= n - 2 * (1 + j) + 1;
    if ((k + 1) % 2) num = -num;
    Rational r(num * detail::pow2(k - 1), detail::factorial(2 * k - 1));
    r.canonicalize();
    return r;
}

/// Truncated series solution with exact coefficients.
struct SeriesSolution {
    int n = 0;
    SeriesKind kind = SeriesKind::beta;
    std::vector<Rational> coeffs;   // c_0..c_K
    int truncation = 0;
    bool is_polynomial = false;
    std::vector<Rational> dropped;  // c_{K+1}..c_{K+4}, zero for polynomials

    int degree() const {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (sgn(coeffs[static_cast<std::size_t>(k)]) != 0) return k;
        return kZeroDegree;
    }

    RationalPoly as_poly() const { return RationalPoly::from_coeffs(coeffs); }

    Jet jet(Complex z) const {
        Complex f = 0, d1 = 0, d2 = 0;
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
            d2 = d2 * z + 2.0 * d1;
            d1 = d1 * z + f;
            const std::size_t i = static_cast<std::size_t>(k);
            f = f * z + (values.size() == coeffs.size() ? values[i] : coeffs[i].get_d());
        }
        return {f, d1, d2};
    }
    Complex eval(Complex z) const { return jet(z).f; }

    /// Bound on the truncation error of the order-th derivative at z.
    double tail_bound(Complex z, int order = 0) const {
        if (is_polynomial) return 0.0;
        const double r = std::abs(z);
        double s = 0;
        for (std::size_t i = 0; i < dropped.size(); ++i) {
            const int k = truncation + 1 + static_cast<int>(i);
            if (k < order) continue;
            double fall = 1;
            for (int j = 0; j < order; ++j) fall *= k - j;
            s += std::abs(dropped[i].get_d()) * fall * std::pow(r, k - order);
        }
        return 2 * s;
    }

    /// Refresh the double copy of the coefficients used for evaluation.
    void finalize() {
        values.clear();
        for (const auto& c : coeffs) values.push_back(c.get_d());
    }

    std::vector<double> values;
};

namespace detail {

inline bool root_criterion(int n, SeriesKind kind) {
    if (kind == SeriesKind::mu) return n % 2 == 0 && n != 2;
    if (kind == SeriesKind::nu) return n % 2 == 1 && n != 1;
    return false;
}

inline SeriesSolution make_series(int n, int K, SeriesKind kind) {
    if (K < 0) throw domain_error("series: truncation must be non-negative");
    const int reach = std::max(K + 4, n + 17);
    std::vector<Rational> all = beta_coefficients(n, reach);
    auto keep = [&](int k) {
        if (kind == SeriesKind::mu) return k % 2 == 0;
        if (kind == SeriesKind::nu) return k % 2 == 1;
        return true;
    };
    for (int k = 0; k <= reach; ++k)
        if (!keep(k)) all[static_cast<std::size_t>(k)] = 0;

    bool zeros = kind != SeriesKind::beta;
    if (zeros) {
        // 8 consecutive same-parity coefficients past n
        int first = n + 1;
        if (!keep(first)) ++first;
        for (int i = 0; i < 8; ++i)
            if (sgn(all[static_cast<std::size_t>(first + 2 * i)]) != 0) zeros = false;
    }
    SeriesSolution s;
    s.n = n;
    s.kind = kind;
    s.truncation = K;
    s.is_polynomial = zeros && root_criterion(n, kind);
    if (zeros != root_criterion(n, kind) && kind != SeriesKind::beta)
        throw std::logic_error("series: zero pattern disagrees with the closed-form root criterion");
    s.coeffs.assign(all.begin(), all.begin() + K + 1);
    if (s.is_polynomial && K < n) s.coeffs.assign(all.begin(), all.begin() + n + 1);
    for (int k = K + 1; k <= K + 4; ++k) s.dropped.push_back(s.is_polynomial ? Rational(0) : all[static_cast<std::size_t>(k)]);
    s.finalize();
    return s;
}

}  // namespace detail

/// Even part of beta_n; a polynomial of degree n for even n != 2.
inline SeriesSolution mu(int n, int K) { return detail::make_series(n, K, SeriesKind::mu); }
inline SeriesSolution mu(int n) { return mu(n, default_truncation(n)); }

/// Odd part of beta_n; a polynomial of degree n for odd n != 1.
inline SeriesSolution nu(int n, int K) { return detail::make_series(n, K, SeriesKind::nu); }
inline SeriesSolution nu(int n) { return nu(n, default_truncation(n)); }

/// beta_n = mu_n + nu_n, never a polynomial.
inline SeriesSolution beta(int n, int K) { return detail::make_series(n, K, SeriesKind::beta); }
inline SeriesSolution beta(int n) { return beta(n, default_truncation(n)); }

/// Hhat_n = M1(n) nu_n for odd n >= 3.
inline Rational m1(int n) {
    if (n < 3 || n % 2 == 0) throw domain_error("m1: defined for odd n >= 3");
    mpz_class num = detail::factorial(n) * detail::pow2((n + 1) / 2);
    if (((n + 1) / 2) % 2) num = -num;
    mpz_class den = mpz_class(n - 1) * (n - 2);
    for (int j = 1; j <= (n - 3) / 2; ++j) den *= n - 2 * (1 + j) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Hhat_n = M2(n) mu_n for even n != 2; M2(0) = 1.
inline Rational m2(int n) {
    if (n < 0 || n % 2 || n == 2) throw domain_error("m2: defined for even n not equal to 2");
    if (n == 0) return 1;
    mpz_class num = detail::factorial(n) * detail::pow2(n / 2);
    if (((n + 2) / 2) % 2) num = -num;
    mpz_class den = mpz_class(n) * (n - 1) * (n - 2);
    for (int j = 1; j <= (n - 4) / 2; ++j) den *= n - 2 * (1 + j);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// M3: 1 on the gap sequence, 1/M1 for odd n, 1/M2 for even n.
inline Rational m3(int n) {
    if (n < 0) throw domain_error("m3: n must be non-negative");
    if (n == 1 || n == 2) return 1;
    return n % 2 ? Rational(1) / m1(n) : Rational(1) / m2(n);
}

/// (-1)^{(n+2)/2} 2^{n-1} pi^{-1/2} Gamma((n-1)/2), for even n.
inline double m2_gamma_form(int n) {
    if (n % 2) throw domain_error("m2_gamma_form: n must be even");
    const double sign = ((n + 2) / 2) % 2 ? -1.0 : 1.0;
    return sign * std::ldexp(1.0, n - 1) / kSqrtPi * gamma_half_integer(n - 1);
}

/// alpha_n: a polynomial for n not in {1,2}, Hhat_1 / Hhat_2 otherwise.
struct Alpha {
    std::variant<SeriesSolution, AnalyticFn> value;

    bool is_analytic() const { return std::holds_alternative<AnalyticFn>(value); }
    const SeriesSolution& series() const { return std::get<SeriesSolution>(value); }
    const AnalyticFn& function() const { return std::get<AnalyticFn>(value); }
    Jet jet(Complex z) const {
        return is_analytic() ? function().jet(z) : series().jet(z);
    }
    Complex eval(Complex z) const { return jet(z).f; }
};

inline Alpha alpha(int n, int K) {
    if (n < 0) throw domain_error("alpha: n must be non-negative");
    if (n == 1 || n == 2) return {hhat_gap_fn(n)};
    RationalPoly p = hhat(n) * m3(n);
    SeriesSolution s;
    s.n = n;
    s.kind = SeriesKind::alpha;
    s.truncation = std::max(K, n);
    s.is_polynomial = true;
    s.coeffs = p.dense();
    s.coeffs.resize(static_cast<std::size_t>(s.truncation + 1));
    s.dropped.assign(4, Rational(0));
    s.finalize();
    return {std::move(s)};
}
inline Alpha alpha(int n) { return alpha(n, default_truncation(n)); }

}  // namespace xherm
