#pragma once

#include <algorithm>
#include <cfloat>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diagnostics.hpp"
#include "polynomial.hpp"

namespace sextica {

/// Relative backward residual |p(x)| / max(sum |a_k||x|^k, DBL_MIN).
/// The floor is the smallest positive normal double, so x = 0 against a
/// zero constant term yields 0 rather than 0/0.
inline double residual_rel(const Polynomial& p, Complex x) {
    const Evaluation e = eval_with_scale(p, x);
    return std::abs(e.value) / std::max(e.scale, DBL_MIN);
}

struct Tolerances {
    double residual_tol = 1e-6;
    double dup_tol = 1e-7;
    double match_tol = 1e-6;
};

struct MatchResult {
    std::vector<int> assignment;  // per candidate: oracle index, or -1 if unmatched
    double max_distance = 0.0;    // over matched pairs
    int unmatched = 0;            // length-mismatch leftovers
};

/// Optimal candidate-to-oracle pairing minimizing the maximum pairwise
/// distance, by exhaustive permutation search (at most 6! = 720 at degree 6).
inline MatchResult match_roots(std::span<const Complex> candidates,
                               std::span<const Complex> oracle_roots,
                               double /*tol*/ = 1e-6) {
    const std::size_t n = candidates.size();
    const std::size_t m = oracle_roots.size();
    MatchResult out;
    out.assignment.assign(n, -1);
    if (n == 0 || m == 0) {
        out.unmatched = static_cast<int>(n);
        return out;
    }

    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t k = std::min(n, m);
    double best = -1.0;
    std::vector<int> best_prefix;
    do {
        double mx = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            mx = std::max(mx, std::abs(candidates[i] - oracle_roots[idx[i]]));
        if (best < 0.0 || mx < best) {
            best = mx;
            best_prefix.assign(idx.begin(), idx.begin() + k);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));

    for (std::size_t i = 0; i < k; ++i) out.assignment[i] = best_prefix[i];
    out.max_distance = best;
    out.unmatched = static_cast<int>(n - k);
    return out;
}

struct RootVerdict {
    Complex value;
    double residual_rel = 0.0;
    std::optional<Complex> matched_oracle;
    std::optional<double> distance;
    enum class Status { verified, spurious, unmatched } status = Status::unmatched;
};

inline const char* to_string(RootVerdict::Status s) {
    switch (s) {
        case RootVerdict::Status::verified: return "verified";
        case RootVerdict::Status::spurious: return "spurious";
        case RootVerdict::Status::unmatched: return "unmatched";
    }
    return "unknown";
}

/// Pipeline context handed to classify() by the caller; plain data so the
/// verification layer stays independent of the solver modules.
struct ClassifyContext {
    std::string method_path;
    BranchFlags flags;
    std::optional<DegeneracyKind> degeneracy;
    S56Mode s56_mode = S56Mode::paper;
    std::optional<T3CrossCheck> t3_crosscheck;
};

struct RunReport {
    Polynomial input{Complex{1.0}};
    std::string method_path;
    BranchFlags flags;
    std::vector<RootVerdict> verdicts;
    std::optional<DegeneracyKind> degeneracy;
    int verified_count = 0;
    S56Mode s56_mode = S56Mode::paper;
    std::optional<T3CrossCheck> t3_crosscheck;
    bool duplicate_candidates = false;
    double oracle_match_distance = 0.0;
};

/// Residual classification plus oracle matching. Verified status depends
/// only on the residual; oracle distance is reported separately so the
/// verdict stays meaningful when the oracle itself struggled.
inline RunReport classify(const Polynomial& input, std::span<const Complex> candidates,
                          std::span<const Complex> oracle_roots, const Tolerances& tol,
                          const ClassifyContext& ctx) {
    RunReport rep{input, ctx.method_path, ctx.flags, {}, ctx.degeneracy,
                  0,     ctx.s56_mode,    ctx.t3_crosscheck};

    const MatchResult match = match_roots(candidates, oracle_roots, tol.match_tol);
    rep.oracle_match_distance = match.max_distance;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        RootVerdict v;
        v.value = candidates[i];
        v.residual_rel = residual_rel(input, candidates[i]);
        if (match.assignment[i] >= 0) {
            v.matched_oracle = oracle_roots[static_cast<std::size_t>(match.assignment[i])];
            v.distance = std::abs(candidates[i] - *v.matched_oracle);
        }
        if (v.residual_rel <= tol.residual_tol)
            v.status = RootVerdict::Status::verified;
        else
            v.status = v.matched_oracle ? RootVerdict::Status::spurious
                                        : RootVerdict::Status::unmatched;
        rep.verified_count += v.status == RootVerdict::Status::verified ? 1 : 0;
        rep.verdicts.push_back(v);
    }

    for (std::size_t i = 0; i < candidates.size() && !rep.duplicate_candidates; ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (std::abs(candidates[i] - candidates[j]) < tol.dup_tol) {
                rep.duplicate_candidates = true;
                break;
            }
    return rep;
}

}  // namespace sextica
