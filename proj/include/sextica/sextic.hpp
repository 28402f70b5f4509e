#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubic.hpp"
#include "diagnostics.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "quartic.hpp"

namespace sextica {

enum class Pipeline { t2, t3 };

inline const char* to_string(Pipeline p) { return p == Pipeline::t2 ? "t2" : "t3"; }

/// The four elementary symbols of the reduction: a1 = sum x_i^2,
/// a2 = sum x_i^2 x_j^2, a3 = sum over triples x_i x_j x_k, a4 = prod x_i.
struct AlphaSymbols {
    Complex a1, a2, a3, a4;
};

/// Every intermediate of a Theorem-2/3 run, kept for diagnostics.
struct SexticReduction {
    Pipeline pipeline = Pipeline::t2;
    Complex V;
    Complex gamma4;                     // the seat actually used
    std::vector<Complex> gamma4_all;    // the +-Gamma_{4,i} group, zeros removed
    std::array<Complex, 4> lambda;      // lambda3..lambda0 (or beta3..beta0)
    std::array<Complex, 4> quartic_coeffs;  // Gamma3..Gamma0 (or Y3..Y0)
    AlphaSymbols alphas;
    Complex shift;                      // 0 for t2; sqrt(-C/15A) for t3
    bool zero_gamma4_excluded = false;
    int quartic_seat = 0;
    double quartic_residual = 0.0;      // z-quartic assembly residual
    std::string quartic_q_regime;
};

/// Candidate values with their origin. values holds s1..s4 (quartic images)
/// and, when defined, s5, s6 from the closing quadratic. group_values are
/// the four z-quartic roots the images came from.
struct CandidateSet {
    std::vector<Complex> values;
    std::array<Complex, 4> group_values{};
    std::vector<std::string> provenance;
};

/// One extra seat evaluated in all-seats mode.
struct SeatRun {
    Complex gamma4;
    std::vector<Complex> candidates;
};

struct SexticOutcome {
    CandidateSet candidates;
    SexticReduction reduction;
    std::optional<DegeneracyKind> degeneracy;
    std::optional<T3CrossCheck> t3_crosscheck;
    std::vector<Complex> oracle_fallback;  // only for pipeline_inapplicable
    std::vector<SeatRun> extra_seats;      // all-seats mode
    bool negative_seat_asymmetry = false;
    S56Mode s56_mode = S56Mode::paper;
};

struct SexticOptions {
    S56Mode s56 = S56Mode::paper;
    bool all_seats = false;
    double quartic_retry_threshold = 1e-9;
};

/// The constant V = Gamma4/alpha3 fixed by the reduction's side constraint:
/// V = -(32f/b^2 + 40d^2/b^3 - 64cd/b^2 + 64e/b) / (4(f - d^2/4b)/b),
/// with the c term absent on the t3 (degree-4-free) pipeline.
inline Complex compute_V(const MonicSextic& ms, Pipeline pl) {
    const Complex b = ms.b, c = ms.c, d = ms.d, e = ms.e, f = ms.f;
    if (b == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_v, "compute_V: b = 0");
    const Complex fd = f - d * d / (4.0 * b);
    if (fd == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_v, "compute_V: f - d^2/4b = 0");
    Complex num = 32.0 * f / (b * b) + 40.0 * d * d / (b * b * b) + 64.0 * e / b;
    if (pl == Pipeline::t2) num -= 64.0 * c * d / (b * b);
    const Complex V = -num / (4.0 * fd / b);
    if (V == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_v, "compute_V: V = 0");
    if (!is_finite(V))
        throw DegeneracyError(DegeneracyKind::nonfinite_intermediate, "compute_V: overflow");
    return V;
}

/// Coefficients (lambda3, lambda2, lambda1, lambda0) of the even sextic in
/// Gamma4 (a cubic in Gamma4^2); the t3 variant is the same with the c terms
/// deleted (beta3..beta0).
inline std::array<Complex, 4> gamma4_equation_coeffs(const MonicSextic& ms, Complex V,
                                                     Pipeline pl) {
    const Complex b = ms.b, d = ms.d, e = ms.e, f = ms.f, g = ms.g;
    const Complex c = pl == Pipeline::t2 ? ms.c : Complex{};
    const Complex b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    const Complex V2 = V * V;

    const Complex l3 = -40960.0 / (V2 * V2 * b4) + 16384.0 / (V2 * V * b3) - 1536.0 / (V2 * b2);
    const Complex l2 = -24576.0 * d / (V2 * b4) + 16384.0 * c / (V2 * b3) +
                       3072.0 * d / (V * b3) - 2048.0 * c / (V * b2) + 1024.0 / V;
    const Complex l1 = -512.0 * d / b + 1536.0 * f / b3 + 28.0 * V2 * f / b -
                       7.0 * V2 * d * d / b2 + 96.0 * V * f / b2 - 168.0 * d * d * V / b3 +
                       192.0 * c * d * V / b2 - 192.0 * V * e / b - 3456.0 * d * d / b4 +
                       4096.0 * c * d / b3 - 1024.0 * e / b2 - 1024.0 * c * c / b2;
    const Complex l0 = -64.0 * V2 * d * d * d / b4 + 64.0 * c * d * d * V2 / b3 -
                       64.0 * e * V2 * d / b2 + 128.0 * V2 * g / b + 192.0 * V2 * d * f / b3 -
                       128.0 * V2 * c * f / b2;

    if (l3 == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_leading,
                              "gamma4_equation_coeffs: leading coefficient vanished");
    if (!is_finite(l3) || !is_finite(l2) || !is_finite(l1) || !is_finite(l0))
        throw DegeneracyError(DegeneracyKind::nonfinite_intermediate,
                              "gamma4_equation_coeffs: overflow");
    return {l3, l2, l1, l0};
}

struct Gamma4Roots {
    std::vector<Complex> all;        // {+-Gamma_{4,i}}, zero values removed
    Complex primary;                 // first nonzero seat, Cardano order
    std::array<Complex, 3> squared;  // the cubic's roots in Gamma4^2
    bool zeros_excluded = false;
};

/// Roots of lambda3 G^6 + lambda2 G^4 + lambda1 G^2 + lambda0 = 0 via the
/// cubic in G^2 (normalized coefficient ratios), then a principal square
/// root of each. Two Newton steps tighten the cubic roots so the returned
/// values meet the 1e-9 residual contract even when the lambdas span many
/// orders of magnitude.
inline Gamma4Roots solve_gamma4(const std::array<Complex, 4>& lam) {
    if (lam[0] == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_leading, "solve_gamma4: lambda3 = 0");
    const Complex bi = lam[1] / lam[0], ci = lam[2] / lam[0], di = lam[3] / lam[0];
    auto squared = solve_cubic({bi, ci, di});
    for (auto& x : squared)
        for (int k = 0; k < 2; ++k) {
            const Complex fv = ((x + bi) * x + ci) * x + di;
            const Complex dv = (3.0 * x + 2.0 * bi) * x + ci;
            if (dv == Complex{}) break;
            x -= fv / dv;
        }

    Gamma4Roots out;
    out.squared = squared;
    for (const Complex& x : squared) {
        const Complex gm = csqrt(x);
        if (gm == Complex{}) {
            out.zeros_excluded = true;  // the paper excludes the zero root
            continue;
        }
        if (out.all.empty()) out.primary = gm;
        out.all.push_back(gm);
        out.all.push_back(-gm);
    }
    if (out.all.empty())
        throw DegeneracyError(DegeneracyKind::all_gamma4_zero, "solve_gamma4: all roots zero");
    return out;
}

struct ZQuartic {
    std::array<Complex, 4> coeffs;  // Gamma3, Gamma2, Gamma1, Gamma0
    AlphaSymbols alphas;
};

/// The z-quartic coefficients and alpha symbols for one Gamma4 seat.
/// alpha3 = Gamma4/V by the defining constraint; alpha2 comes from the Q
/// identity, alpha4 from the Gamma4 definition rearranged; both are
/// diagnostics only.
inline ZQuartic quartic_in_z_coeffs(const MonicSextic& ms, Complex V, Complex gamma4,
                                    Pipeline pl) {
    if (gamma4 == Complex{})
        throw DegeneracyError(DegeneracyKind::degenerate_gamma4, "quartic_in_z_coeffs: Gamma4 = 0");
    const Complex b = ms.b, d = ms.d, e = ms.e, f = ms.f, g = ms.g;
    const Complex c = pl == Pipeline::t2 ? ms.c : Complex{};
    const Complex G = gamma4;
    const Complex b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    const Complex G2 = G * G, G3p = G2 * G, G4p = G2 * G2;
    const Complex V2 = V * V;
    const Complex fd = f - d * d / (4.0 * b);

    const Complex a3 = G / V;
    const Complex a1 = (G4p + 32.0 * G4p / (V2 * b2) - 8.0 * G4p / (V * b) +
                        12.0 * d * G2 / b2 - 8.0 * c * G2 / b - V2 * fd / b) /
                       (4.0 * G2);

    const Complex Gam3 = 4.0 * a3 / b + G;
    const Complex Gam2 = 8.0 * G2 / (V * b) - 6.0 * d / b2 + 4.0 * c / b +
                         fd * V2 / (2.0 * b * G2) - 8.0 * G2 / (V2 * b2);
    const Complex Gam1 = 5.0 * G3p / (V * b) + 3.0 * V * d * d / (4.0 * b3 * G) -
                         6.0 * d * G / b2 + 4.0 * c * G / b - d * c * V / (b2 * G) +
                         e * V / (b * G) - G3p / 4.0 - 8.0 * G3p / (V2 * b2) +
                         fd * V2 / (4.0 * G * b);
    const Complex U = G2 / 4.0;
    const Complex W = V2 * fd / (4.0 * b * G2);
    const Complex Gam0 =
        G4p / (2.0 * V * b) - V2 * d * d * d / (16.0 * b4 * G2) + 3.0 * V * d * d / (8.0 * b3) -
        3.0 * d * G2 / (4.0 * b2) + c * G2 / (2.0 * b) + c * d * d * V2 / (8.0 * b3 * G2) -
        c * d * V / (2.0 * b2) + e * V / (2.0 * b) - e * V2 * d / (4.0 * b2 * G2) +
        g * V2 / (2.0 * b * G2) -
        (U + W) * (U + 8.0 * G2 / (V2 * b2) - 2.0 * G2 / (V * b) + 3.0 * d / b2 - 2.0 * c / b - W);

    // alpha2 from the Q identity (alpha1 left in), alpha4 from
    // Gamma4 = ([alpha2 + 6 alpha4] + d/2b)/alpha3 rearranged.
    const Complex a2 =
        (1024.0 * G2 / V - 512.0 * d / b - 6144.0 * G4p / (V2 * V2 * b4) +
         3072.0 * G4p / (V2 * V * b3) + 384.0 * G4p / (V2 * b2) - 4608.0 * d * G2 / (V2 * b4) -
         1536.0 * G2 * a1 / (V2 * b2) + 3072.0 * c * G2 / (V2 * b3) + 384.0 * f / b3 +
         96.0 * V * fd / b2 - 672.0 * d * d / b4 + 768.0 * c * d / b3 - 768.0 * e / b2 -
         192.0 * G4p / (V * b) + 96.0 * f * V / b2 + 288.0 * d * G2 / b2 + 96.0 * G2 * a1 -
         192.0 * c * G2 / b + 24.0 * V2 * fd / b - 168.0 * d * d * V / b3 +
         192.0 * c * d * V / b2 - 192.0 * e * V / b) /
        1024.0;
    const Complex a4 = (a3 * G - d / (2.0 * b) - a2) / 6.0;

    for (Complex z : {Gam3, Gam2, Gam1, Gam0, a1})
        if (!is_finite(z))
            throw DegeneracyError(DegeneracyKind::nonfinite_intermediate,
                                  "quartic_in_z_coeffs: overflow");
    return {{Gam3, Gam2, Gam1, Gam0}, {a1, a2, a3, a4}};
}

namespace detail {

struct SeatCandidates {
    std::vector<Complex> values;
    std::array<Complex, 4> xi{};
    ZQuartic zq;
    QuarticSolution qs;
    std::optional<DegeneracyKind> degeneracy;
};

/// One seat of the reduction: z-quartic, Theorem-1 solve, x = (z^2 - a1)/2
/// images, and the closing quadratic for s5, s6.
inline SeatCandidates run_seat(const MonicSextic& ms, Complex V, Complex gamma4, Pipeline pl,
                               const SexticOptions& opt) {
    SeatCandidates out;
    out.zq = quartic_in_z_coeffs(ms, V, gamma4, pl);
    const auto& gc = out.zq.coeffs;
    out.qs = solve_quartic_full(Polynomial{Complex{1.0}, gc[0], gc[1], gc[2], gc[3]},
                                opt.quartic_retry_threshold);
    out.xi = out.qs.roots;

    Complex prod{1.0};
    for (int i = 0; i < 4; ++i) {
        const Complex s = (out.xi[static_cast<std::size_t>(i)] * out.xi[static_cast<std::size_t>(i)] -
                           out.zq.alphas.a1) /
                          2.0;
        if (!is_finite(s))
            throw DegeneracyError(DegeneracyKind::nonfinite_intermediate, "candidate overflow");
        out.values.push_back(s);
        prod *= s;
    }
    if (prod == Complex{}) {
        out.degeneracy = DegeneracyKind::zero_candidate_product;
        return out;  // s5, s6 undefined; the four images stand alone
    }
    const Complex sum = out.values[0] + out.values[1] + out.values[2] + out.values[3];
    const Complex lin = opt.s56 == S56Mode::paper ? ms.b - sum : ms.b + sum;
    const RootPair tail = solve_quadratic(Complex{1.0}, lin, ms.g / prod);
    out.values.push_back(tail.r1);
    out.values.push_back(tail.r2);
    return out;
}

inline SexticOutcome run_pipeline(const MonicSextic& ms, Pipeline pl, const SexticOptions& opt) {
    SexticOutcome out;
    out.s56_mode = opt.s56;
    out.reduction.pipeline = pl;
    try {
        const Complex V = compute_V(ms, pl);
        out.reduction.V = V;
        const auto lam = gamma4_equation_coeffs(ms, V, pl);
        out.reduction.lambda = lam;
        const Gamma4Roots g4 = solve_gamma4(lam);
        out.reduction.gamma4_all = g4.all;
        out.reduction.zero_gamma4_excluded = g4.zeros_excluded;
        out.reduction.gamma4 = g4.primary;

        const SeatCandidates primary = run_seat(ms, V, g4.primary, pl, opt);
        out.reduction.quartic_coeffs = primary.zq.coeffs;
        out.reduction.alphas = primary.zq.alphas;
        out.reduction.quartic_seat = primary.qs.seat;
        out.reduction.quartic_residual = primary.qs.max_residual;
        out.reduction.quartic_q_regime = primary.qs.q_regime;
        out.candidates.values = primary.values;
        out.candidates.group_values = primary.xi;
        out.candidates.provenance = {"s1", "s2", "s3", "s4"};
        if (primary.values.size() == 6) {
            out.candidates.provenance.push_back("s5");
            out.candidates.provenance.push_back("s6");
        }
        out.degeneracy = primary.degeneracy;

        if (opt.all_seats) {
            // remaining positive seats (redundancy claim under test)
            for (std::size_t k = 0; k < g4.all.size(); k += 2) {
                const Complex seat = g4.all[k];
                if (seat == g4.primary) continue;
                try {
                    out.extra_seats.push_back({seat, run_seat(ms, V, seat, pl, opt).values});
                } catch (const DegeneracyError&) {
                    out.extra_seats.push_back({seat, {}});
                }
            }
            // negative primary seat: the paper argues the images are unchanged
            try {
                const auto neg = run_seat(ms, V, -g4.primary, pl, opt);
                double worst = 0.0;
                const std::size_t n = std::min(neg.values.size(), primary.values.size());
                for (std::size_t i = 0; i < n; ++i) {
                    double bestd = 1e300;
                    for (std::size_t j = 0; j < n; ++j)
                        bestd = std::min(bestd, std::abs(neg.values[i] - primary.values[j]));
                    worst = std::max(worst, bestd);
                }
                const double scale = 1.0 + std::abs(primary.values[0]);
                out.negative_seat_asymmetry = worst > 1e-8 * scale || neg.values.size() != primary.values.size();
            } catch (const DegeneracyError&) {
                out.negative_seat_asymmetry = true;
            }
        }
    } catch (const DegeneracyError& err) {
        out.degeneracy = err.kind;
    }
    return out;
}

}  // namespace detail

/// Theorem 2: requires a nonzero x^5 coefficient after monic reduction.
inline SexticOutcome solve_sextic_t2(const Polynomial& p, const SexticOptions& opt = {}) {
    if (p.degree() != 6) throw std::invalid_argument("solve_sextic_t2: degree must be 6");
    const MonicSextic ms = MonicSextic::from(p);
    if (ms.b == Complex{})
        throw std::invalid_argument("solve_sextic_t2: b = 0 violates the t2 precondition");
    return detail::run_pipeline(ms, Pipeline::t2, opt);
}

/// Theorem 3: zero x^5 coefficient; substitutes w = sqrt(-C/15A) + x to
/// annihilate the degree-4 term (Taylor shift is normative), cross-checks
/// the printed shifted coefficients, and runs the c-free machinery.
/// Candidates are mapped back to w-space.
inline SexticOutcome solve_sextic_t3(const Polynomial& p, const SexticOptions& opt = {}) {
    if (p.degree() != 6) throw std::invalid_argument("solve_sextic_t3: degree must be 6");
    const Polynomial mono = make_monic(p);
    if (mono.coeffs()[1] != Complex{})
        throw std::invalid_argument("solve_sextic_t3: x^5 coefficient must be zero");

    const Complex CA = mono.coeffs()[2], DA = mono.coeffs()[3], EA = mono.coeffs()[4],
                  FA = mono.coeffs()[5], GA = mono.coeffs()[6];
    if (CA == Complex{}) {
        SexticOutcome out;
        out.s56_mode = opt.s56;
        out.reduction.pipeline = Pipeline::t3;
        out.degeneracy = DegeneracyKind::degenerate_shift;
        return out;
    }

    const Complex s = csqrt(-CA / 15.0);
    const Polynomial shifted = shift(mono, s);
    const auto& sc = shifted.coeffs();
    const MonicSextic ms{sc[1], sc[2], sc[3], sc[4], sc[5], sc[6]};

    T3CrossCheck cc;
    cc.taylor = {ms.b, ms.c, ms.d, ms.e, ms.f, ms.g};
    const Complex s2 = s * s, s3 = s2 * s, s5 = s3 * s2, s6 = s3 * s3;
    cc.paper = {
        6.0 * s,
        Complex{},                                            // no degree-4 term by design
        8.0 * CA / 3.0 * s + DA,                              // printed d
        -CA * CA / 3.0 + 3.0 * DA * s + EA,                   // printed e
        -18.0 * CA * CA / 5.0 * s - DA * CA / 5.0 + 2.0 * EA * s + FA,  // printed f
        -16.0 * CA * CA * CA / 3375.0 - DA * CA / 15.0 * s - EA * CA / 15.0 + FA * s + GA,
    };

    SexticOutcome out = detail::run_pipeline(ms, Pipeline::t3, opt);
    out.t3_crosscheck = cc;
    out.reduction.shift = s;
    for (auto& v : out.candidates.values) v += s;  // back to w-space
    for (auto& run : out.extra_seats)
        for (auto& v : run.candidates) v += s;
    return out;
}

/// Dispatch per the theorems' own preconditions: t2 when the monic x^5
/// coefficient is nonzero, t3 when it is zero and the x^4 coefficient is
/// not; otherwise neither pipeline applies and the oracle's roots are the
/// only available answer.
inline SexticOutcome solve_sextic(const Polynomial& p, const SexticOptions& opt = {}) {
    if (p.degree() != 6) throw std::invalid_argument("solve_sextic: degree must be 6");
    const Polynomial mono = make_monic(p);
    if (mono.coeffs()[1] != Complex{}) return solve_sextic_t2(p, opt);
    if (mono.coeffs()[2] != Complex{}) return solve_sextic_t3(p, opt);
    SexticOutcome out;
    out.s56_mode = opt.s56;
    out.degeneracy = DegeneracyKind::pipeline_inapplicable;
    out.oracle_fallback = find_roots(p).roots;
    return out;
}

}  // namespace sextica
