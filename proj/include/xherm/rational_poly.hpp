#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace xherm {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Univariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(const Rational& c) { set(0, c); }  // NOLINT
    RationalPoly(long c) { set(0, Rational(c)); }    // NOLINT

    static RationalPoly monomial(const Rational& c, int degree) {
        RationalPoly p;
        p.set(degree, c);
        return p;
    }
    static RationalPoly x() { return monomial(1, 1); }
    static RationalPoly from_coeffs(const std::vector<Rational>& c) {
        RationalPoly p;
        for (std::size_t k = 0; k < c.size(); ++k) p.set(static_cast<int>(k), c[k]);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
    Rational leading() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    Rational coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& terms() const { return terms_; }

    /// Dense list c_0..c_deg, including zeros.
    std::vector<Rational> dense() const {
        std::vector<Rational> out(static_cast<std::size_t>(degree() + 1));
        for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k)] = c;
        return out;
    }

    void set(int k, const Rational& c) {
        if (k < 0) throw std::invalid_argument("negative exponent");
        if (sgn(c) == 0)
            terms_.erase(k);
        else {
            Rational v = c;
            v.canonicalize();
            terms_[k] = std::move(v);
        }
    }

    RationalPoly derivative() const {
        RationalPoly d;
        for (const auto& [k, c] : terms_)
            if (k > 0) d.terms_[k - 1] = c * k;
        return d;
    }

    /// True when only even (parity 0) or only odd (parity 1) powers occur.
    bool has_parity(int parity) const {
        for (const auto& [k, c] : terms_)
            if ((k & 1) != parity) return false;
        return true;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        int prev = degree();
        if (prev < 0) return acc;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (int j = prev; j > it->first; --j) acc *= x;
            acc += it->second;
            prev = it->first;
        }
        for (int j = prev; j > 0; --j) acc *= x;
        return acc;
    }

    Complex eval(Complex z) const {
        Complex acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * z + coeff_d(k);
        return acc;
    }
    double eval(double x) const { return eval(Complex(x, 0)).real(); }

    RationalPoly& operator+=(const RationalPoly& o) {
        for (const auto& [k, c] : o.terms_) set(k, coeff(k) + c);
        return *this;
    }
    RationalPoly& operator-=(const RationalPoly& o) {
        for (const auto& [k, c] : o.terms_) set(k, coeff(k) - c);
        return *this;
    }
    RationalPoly& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        std::map<int, Rational> acc;
        for (const auto& [i, ci] : a.terms_)
            for (const auto& [j, cj] : b.terms_) acc[i + j] += ci * cj;
        RationalPoly out;
        for (auto& [k, c] : acc) out.set(k, c);
        return out;
    }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            Rational a = abs(c);
            os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (k == 0 || a != 1) os << a.get_str();
            if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << "x";
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os.str();
    }

private:
    double coeff_d(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0.0 : it->second.get_d();
    }

    std::map<int, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.to_string(); }

}  // namespace xherm
