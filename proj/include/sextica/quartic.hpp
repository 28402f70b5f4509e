#pragma once

#include <array>

#include "cubic.hpp"
#include "diagnostics.hpp"
#include "polynomial.hpp"
#include "verify.hpp"

namespace sextica {

/// Depressed quartic y^4 + P y^2 + Q y + R obtained from a general quartic
/// through x = shift + y/4.
struct DepressedQuartic {
    Complex P, Q, R;
    Complex shift;  // -b/(4a)
};

/// Resolvent-cubic data for y^4 + P y^2 + Q y + R: the cubic is
/// y0^3 + P' y0^2 + ((P^2-4R)/16) y0 - Q^2/64 with Cardano intermediates
/// R' (the D analog) and Q' (the C analog).
struct ResolventCubicCoeffs {
    Complex Pp, Qp, Rp;

    static ResolventCubicCoeffs of(const DepressedQuartic& dq) {
        const Complex P = dq.P, Q = dq.Q, R = dq.R;
        return {P / 2.0, -(3.0 * P * P + 36.0 * R) / 16.0,
                (-27.0 * Q * Q - 2.0 * P * P * P + 72.0 * P * R) / 64.0};
    }
};

struct ResolventTriple {
    Complex y01, y02, y03;
};

inline DepressedQuartic depress_quartic(const Polynomial& p) {
    if (p.degree() != 4) throw std::invalid_argument("depress_quartic: degree must be 4");
    if (p.leading() == Complex{})
        throw ZeroLeadingCoefficient("depress_quartic: zero leading coefficient");
    const auto& co = p.coeffs();
    const Complex ba = co[1] / co[0], ca = co[2] / co[0], da = co[3] / co[0],
                  ea = co[4] / co[0];
    DepressedQuartic dq;
    dq.P = -6.0 * ba * ba + 16.0 * ca;
    dq.Q = 8.0 * ba * ba * ba - 32.0 * ca * ba + 64.0 * da;
    dq.R = -3.0 * ba * ba * ba * ba + 16.0 * ca * ba * ba - 64.0 * da * ba + 256.0 * ea;
    dq.shift = -ba / 4.0;
    return dq;
}

inline Polynomial resolvent_cubic_poly(const DepressedQuartic& dq) {
    return Polynomial{Complex{1.0}, dq.P / 2.0, (dq.P * dq.P - 4.0 * dq.R) / 16.0,
                      -dq.Q * dq.Q / 64.0};
}

/// The three resolvent roots. y01 is the principal Cardano value; the other
/// two come from the quadratic with product Q^2/(64 y01) when y01 != 0, else
/// from deflation of the cubic (y01 = 0 is legal and handled at assembly).
inline ResolventTriple resolvent_roots(const DepressedQuartic& dq) {
    const Complex c1 = dq.P / 2.0;
    const Complex c2 = (dq.P * dq.P - 4.0 * dq.R) / 16.0;
    const Complex c3 = -dq.Q * dq.Q / 64.0;
    const Complex y01 = solve_cubic({c1, c2, c3})[0];
    RootPair rest;
    if (y01 != Complex{})
        rest = solve_quadratic(Complex{1.0}, c1 + y01, dq.Q * dq.Q / (64.0 * y01));
    else
        rest = solve_quadratic(Complex{1.0}, c1 + y01, c2 + y01 * (c1 + y01));
    return {y01, rest.r1, rest.r2};
}

/// The four roots of y^4 + P y^2 + Q y + R from a resolvent triple. Two
/// square roots are taken on the principal branch; the third is forced so
/// the product satisfies -8 u0 u1 u2 = Q (or +8... = Q when Q > 0), the
/// cross-term cancellation condition the proof needs. Q = 0 switches to the
/// biquadratic family, and P = Q = R = 0 yields four zeros.
inline std::array<Complex, 4> assemble_depressed_roots(const DepressedQuartic& dq,
                                                       const ResolventTriple& rt) {
    const Complex P = dq.P, Q = dq.Q, R = dq.R;
    if (P == Complex{} && Q == Complex{} && R == Complex{})
        return {Complex{}, Complex{}, Complex{}, Complex{}};

    if (Q == Complex{}) {
        Complex seat = rt.y01;
        if (seat == Complex{}) seat = std::abs(rt.y02) >= std::abs(rt.y03) ? rt.y02 : rt.y03;
        if (seat == Complex{}) return {Complex{}, Complex{}, Complex{}, Complex{}};
        const Complex u = csqrt(seat);
        const Complex v = csqrt(-(P / 2.0 + seat));
        return {u + v, -u - v, -u + v, u - v};
    }

    const Complex u0 = csqrt(rt.y01);
    const Complex u1 = csqrt(rt.y02);
    const bool q_pos = Q.imag() == 0.0 && Q.real() > 0.0;
    Complex u2;
    if (u0 * u1 == Complex{})
        u2 = csqrt(rt.y03);
    else
        u2 = q_pos ? Q / (8.0 * u0 * u1) : -Q / (8.0 * u0 * u1);

    if (q_pos) return {-u0 - u1 - u2, -u0 + u1 + u2, u0 - u1 + u2, u0 + u1 - u2};
    return {u0 + u1 + u2, -u0 - u1 + u2, -u0 + u1 - u2, u0 - u1 - u2};
}

struct QuarticSolution {
    std::array<Complex, 4> roots;
    double max_residual = 0.0;  // relative backward, against the input quartic
    int seat = 0;               // which resolvent rotation was kept
    bool residual_ok = false;
    std::string q_regime;
    bool biquadratic_path = false;
};

/// Theorem-1 solve: depress, resolve, assemble, undo the substitution.
/// If the primary resolvent seat leaves any root above the residual
/// threshold, assembly is retried with the other two seats and the best
/// rotation is kept.
inline QuarticSolution solve_quartic_full(const Polynomial& p, double threshold = 1e-9) {
    const DepressedQuartic dq = depress_quartic(p);
    const ResolventTriple rt = resolvent_roots(dq);
    const Complex ys[3] = {rt.y01, rt.y02, rt.y03};

    QuarticSolution best;
    double best_res = -1.0;
    for (int seat = 0; seat < 3; ++seat) {
        const ResolventTriple rot{ys[seat % 3], ys[(seat + 1) % 3], ys[(seat + 2) % 3]};
        const auto depressed = assemble_depressed_roots(dq, rot);
        std::array<Complex, 4> roots;
        double mx = 0.0;
        for (int i = 0; i < 4; ++i) {
            roots[i] = dq.shift + depressed[i] / 4.0;
            mx = std::max(mx, residual_rel(p, roots[i]));
        }
        if (best_res < 0.0 || mx < best_res) {
            best_res = mx;
            best.roots = roots;
            best.seat = seat;
        }
        if (mx <= threshold) break;
    }
    best.max_residual = best_res;
    best.residual_ok = best_res <= threshold;
    best.biquadratic_path = dq.Q == Complex{};
    best.q_regime = dq.Q == Complex{} ? "q_zero"
                    : (dq.Q.imag() == 0.0 && dq.Q.real() > 0.0) ? "q_gt_0"
                                                                : "q_le_0";
    return best;
}

inline std::array<Complex, 4> solve_quartic(const Polynomial& p) {
    return solve_quartic_full(p).roots;
}

}  // namespace sextica
