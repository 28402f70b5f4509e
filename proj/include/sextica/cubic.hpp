#pragma once

#include <array>

#include "radicals.hpp"

namespace sextica {

/// Monic cubic x^3 + b x^2 + c x + d.
struct GeneralCubic {
    Complex b, c, d;
};

/// Cardano intermediates D = 27d + 2b^3 - 9cb and C = 9c - 3b^2 of a monic
/// cubic; the depressed form is w^3 + (C/9) w + (D/27) with w = 3y + b.
struct CardanoIntermediates {
    Complex D, C;

    static CardanoIntermediates of(const GeneralCubic& c3) {
        return {27.0 * c3.d + 2.0 * c3.b * c3.b * c3.b - 9.0 * c3.c * c3.b,
                9.0 * c3.c - 3.0 * c3.b * c3.b};
    }
};

namespace detail {

struct CardanoParts {
    Complex u, v;  // the two cube-root terms; u * v == -p/3 by construction
};

inline CardanoParts cardano_parts(Complex p, Complex q) {
    Complex s = csqrt(q * q / 4.0 + p * p * p / 27.0);
    // The paper's sqrt is branch-free; take the branch that adds
    // constructively to -q/2, else the radicand cancels catastrophically.
    if ((std::conj(-q / 2.0) * s).real() < 0.0) s = -s;
    const Complex u = ccbrt(-q / 2.0 + s);
    const Complex v = (u == Complex{}) ? ccbrt(-q / 2.0 - s) : (-p / 3.0) / u;
    return {u, v};
}

}  // namespace detail

/// All three roots of the depressed cubic w^3 + p w + q = 0. The first is
/// the principal Cardano value; the cube-root branches are paired so their
/// product equals -p/3, and the remaining roots come from deflation.
inline std::array<Complex, 3> solve_depressed_cubic(Complex p, Complex q) {
    const auto [u, v] = detail::cardano_parts(p, q);
    const Complex w1 = u + v;
    const RootPair rest = solve_quadratic(Complex{1.0}, w1, w1 * w1 + p);
    return {w1, rest.r1, rest.r2};
}

/// All three roots of the monic cubic, via the depressed form shifted by -b/3.
inline std::array<Complex, 3> solve_cubic(const GeneralCubic& c3) {
    const auto dc = CardanoIntermediates::of(c3);
    const auto w = solve_depressed_cubic(dc.C / 9.0, dc.D / 27.0);
    return {w[0] - c3.b / 3.0, w[1] - c3.b / 3.0, w[2] - c3.b / 3.0};
}

}  // namespace sextica
