#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace sextica {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct DegenerateLeading : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Principal square root: nonnegative real part; on the Re == 0 line the
/// branch with nonnegative imaginary part is returned.
inline Complex csqrt(Complex z) {
    Complex w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
    return w;
}

/// All three cube roots of z, principal first (argument in (-pi/3, pi/3]),
/// then the principal times e^{2i pi/3} and e^{-2i pi/3}.
inline std::array<Complex, 3> ccbrt_all(Complex z) {
    if (z == Complex{}) return {Complex{}, Complex{}, Complex{}};
    const double r = std::cbrt(std::abs(z));
    const double th = std::arg(z) / 3.0;
    constexpr double third_turn = 2.0943951023931953;  // 2*pi/3
    return {std::polar(r, th), std::polar(r, th + third_turn), std::polar(r, th - third_turn)};
}

inline Complex ccbrt(Complex z) { return ccbrt_all(z)[0]; }

struct RootPair {
    Complex r1, r2;
};

/// Both roots of a x^2 + b x + c = 0. The larger-magnitude root is formed
/// from the sign-matched discriminant root, the other from c/(a r1), so no
/// digits are lost to cancellation when b^2 >> 4ac.
inline RootPair solve_quadratic(Complex a, Complex b, Complex c) {
    if (a == Complex{}) throw DegenerateLeading("solve_quadratic: zero leading coefficient");
    Complex s = csqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * s).real() < 0.0) s = -s;
    const Complex r1 = (-b - s) / (2.0 * a);
    const Complex r2 =
        (c != Complex{} && r1 != Complex{}) ? c / (a * r1) : (-b + s) / (2.0 * a);
    return {r1, r2};
}

}  // namespace sextica
