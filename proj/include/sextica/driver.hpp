#pragma once

#include <optional>
#include <string>

#include "oracle.hpp"
#include "sextic.hpp"
#include "verify.hpp"

namespace sextica {

/// A forced method whose stated precondition the input violates (wrong
/// degree, b = 0 under t2, nonzero x^5 under t3, ...).
struct PreconditionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    std::string method = "auto";  // auto | t1 | t2 | t3 | oracle
    S56Mode s56 = S56Mode::paper;
    bool all_seats = false;
    Tolerances tol{};
    OracleConfig oracle{};
};

struct SolveArtifacts {
    RunReport run;
    OracleResult oracle;
    std::optional<SexticReduction> reduction;  // present for sextic pipeline runs
};

/// Full single-instance flow: closed-form path (or forced method), oracle,
/// classification. Degree 5 has no closed form here and routes to the
/// oracle under "auto".
inline SolveArtifacts run_solve(const Polynomial& p, const SolveOptions& opt = {}) {
    const int deg = p.degree();
    if (deg < 2 || deg > 6)
        throw std::invalid_argument("run_solve: degree must be between 2 and 6");
    if (p.leading() == Complex{})
        throw ZeroLeadingCoefficient("run_solve: zero leading coefficient");

    const std::string& m = opt.method;
    if (m == "t1" && deg != 4) throw PreconditionViolation("t1 requires degree 4");
    if ((m == "t2" || m == "t3") && deg != 6)
        throw PreconditionViolation(m + " requires degree 6");

    SolveArtifacts art;
    art.oracle = find_roots(p, opt.oracle);

    ClassifyContext ctx;
    ctx.s56_mode = opt.s56;
    std::vector<Complex> candidates;

    if (m == "oracle" || (m == "auto" && deg == 5)) {
        ctx.method_path = "oracle";
        candidates = art.oracle.roots;
    } else if (deg == 2) {
        ctx.method_path = "quadratic";
        const auto& co = p.coeffs();
        const RootPair r = solve_quadratic(co[0], co[1], co[2]);
        candidates = {r.r1, r.r2};
    } else if (deg == 3) {
        ctx.method_path = "cubic";
        const Polynomial mono = make_monic(p);
        const auto r = solve_cubic({mono.coeffs()[1], mono.coeffs()[2], mono.coeffs()[3]});
        candidates.assign(r.begin(), r.end());
    } else if (deg == 4) {
        ctx.method_path = "t1";
        const QuarticSolution qs = solve_quartic_full(p);
        candidates.assign(qs.roots.begin(), qs.roots.end());
        ctx.flags.q_regime = qs.q_regime;
        ctx.flags.resolvent_seat = qs.seat;
        ctx.flags.biquadratic_path = qs.biquadratic_path;
    } else {
        SexticOptions sopt{opt.s56, opt.all_seats};
        SexticOutcome out;
        if (m == "t2") {
            const MonicSextic ms = MonicSextic::from(p);
            if (ms.b == Complex{}) throw PreconditionViolation("t2 requires b != 0");
            out = solve_sextic_t2(p, sopt);
        } else if (m == "t3") {
            if (make_monic(p).coeffs()[1] != Complex{})
                throw PreconditionViolation("t3 requires a zero x^5 coefficient");
            out = solve_sextic_t3(p, sopt);
        } else {
            out = solve_sextic(p, sopt);
        }
        ctx.method_path = out.degeneracy == DegeneracyKind::pipeline_inapplicable
                              ? "none"
                              : std::string(to_string(out.reduction.pipeline));
        ctx.degeneracy = out.degeneracy;
        ctx.t3_crosscheck = out.t3_crosscheck;
        ctx.flags.zero_gamma4_excluded = out.reduction.zero_gamma4_excluded;
        ctx.flags.negative_seat_asymmetry = out.negative_seat_asymmetry;
        ctx.flags.q_regime = out.reduction.quartic_q_regime;
        ctx.flags.resolvent_seat = out.reduction.quartic_seat;
        candidates = out.candidates.values;
        if (!out.degeneracy || *out.degeneracy == DegeneracyKind::zero_candidate_product)
            art.reduction = out.reduction;
    }

    art.run = classify(p, candidates, art.oracle.roots, opt.tol, ctx);
    return art;
}

}  // namespace sextica
