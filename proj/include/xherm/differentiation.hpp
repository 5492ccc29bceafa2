#pragma once

#include <complex>
#include <functional>

namespace xherm {

using Complex = std::complex<double>;

namespace detail {

// Central difference along direction dir, one Richardson step.
inline Complex richardson(const std::function<Complex(Complex)>& f, Complex z, Complex dir, double h) {
    auto d = [&](double s) { return (f(z + s * dir) - f(z - s * dir)) / (2 * s); };
    return (4.0 * d(h / 2) - d(h)) / 3.0;
}

}  // namespace detail

/// Wirtinger derivative d/dz = (d/dx - i d/dy)/2 by central differences.
inline Complex holomorphic_derivative(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
    const Complex dx = detail::richardson(f, z, Complex(1, 0), h);
    const Complex dy = detail::richardson(f, z, Complex(0, 1), h);
    return 0.5 * (dx - Complex(0, 1) * dy);
}

/// Wirtinger derivative d/dzbar = (d/dx + i d/dy)/2; vanishes for holomorphic f.
inline Complex antiholomorphic_derivative(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
    const Complex dx = detail::richardson(f, z, Complex(1, 0), h);
    const Complex dy = detail::richardson(f, z, Complex(0, 1), h);
    return 0.5 * (dx + Complex(0, 1) * dy);
}

}  // namespace xherm
