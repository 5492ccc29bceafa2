#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "errors.hpp"
#include "hermite.hpp"
#include "partitions.hpp"
#include "rational_poly.hpp"

namespace xherm {

/// The X_2^(1) family: base partition (1), doubled (1,1), gap sequence {1,2}.
struct XopFamily {
    Partition base{1};
    Partition doubled = double_partition(base);
    GapSequence gaps = gap_sequence(doubled);
    std::set<int> excluded = excluded_indices(base);

    bool admissible() const { return is_adler(gaps); }
    bool allows(int n) const { return n >= 0 && !excluded.count(n); }
};

namespace detail {

inline RationalPoly det(const std::vector<std::vector<RationalPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RationalPoly acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<RationalPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<RationalPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        RationalPoly t = m[0][c] * det(minor);
        if (c % 2)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

}  // namespace detail

/// Wr(p_1,...,p_l): determinant with row j holding the j-th derivatives.
inline RationalPoly wronskian_poly(const std::vector<RationalPoly>& polys) {
    if (polys.empty()) throw std::invalid_argument("wronskian_poly: empty list");
    std::vector<std::vector<RationalPoly>> m;
    std::vector<RationalPoly> row = polys;
    for (std::size_t j = 0; j < polys.size(); ++j) {
        m.push_back(row);
        for (auto& p : row) p = p.derivative();
    }
    return detail::det(m);
}

/// H_n^(1) = Wr(H_1, H_2, H_n), n not in {1,2}.
inline RationalPoly xop_polynomial(int n) {
    if (n < 0) throw domain_error("xop_polynomial: n must be non-negative");
    if (!XopFamily{}.allows(n)) throw gap_sequence_error(n);
    return wronskian_poly({hermite(1), hermite(2), hermite(n)});
}

/// Hhat_n = H_n + 4n H_{n-2} + 4n(n-3) H_{n-4}.
inline RationalPoly hhat(int n) {
    if (n < 0) throw domain_error("hhat: n must be non-negative");
    if (n == 1 || n == 2) throw gap_sequence_error(n);
    RationalPoly out = hermite(n);
    const long pre[2] = {4L * n, 4L * n * (n - 3)};
    for (int s = 0; s < 2; ++s) {
        const int idx = n - 2 * (s + 1);
        if (pre[s] == 0) continue;
        if (idx < 0) throw domain_error("hhat: negative Hermite index with nonzero prefactor");
        out += hermite(idx) * Rational(pre[s]);
    }
    return out;
}

/// W(x) = e^{-x^2} / (4(1+2x^2))^2.
inline double weight(double x) {
    const double q = 4 * (1 + 2 * x * x);
    return std::exp(-x * x) / (q * q);
}

/// e^{-x^2}/(1+2x^2)^2 = 16 W(x).
inline double weight_hhat(double x) {
    const double q = 1 + 2 * x * x;
    return std::exp(-x * x) / (q * q);
}

enum class NormKind { hhat, xop };

/// Squared norm divided by sqrt(pi), exact.
inline Rational norm_prefactor(int n, NormKind kind) {
    if (n < 0) throw domain_error("norm_squared: n must be non-negative");
    if (n == 1 || n == 2) throw gap_sequence_error(n);
    mpz_class fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const mpz_class p = mpz_class(n - 1) * (n - 2);
    mpz_class two_n = 1;
    two_n <<= static_cast<mp_bitcnt_t>(n);
    if (kind == NormKind::hhat) {
        Rational r(two_n * fact, p);
        r.canonicalize();
        return r;
    }
    return Rational(two_n * 4 * fact * p);
}

/// sqrt(pi) 2^n n!/((n-1)(n-2)) for Hhat, sqrt(pi) 2^{n+2} n! (n-1)(n-2) for H^(1).
inline double norm_squared(int n, NormKind kind = NormKind::hhat) {
    return kSqrtPi * norm_prefactor(n, kind).get_d();
}

/// U(z) = z^2 - (8 - 16z^2)/(1+2z^2)^2.
inline Complex potential(Complex z) {
    const Complex q = 1.0 + 2.0 * z * z;
    if (std::abs(q) < 1e-14) throw singularity_error("potential: pole at z = +-i/sqrt(2)");
    return z * z - (8.0 - 16.0 * z * z) / (q * q);
}

}  // namespace xherm
