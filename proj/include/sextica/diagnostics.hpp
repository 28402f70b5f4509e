#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "radicals.hpp"

namespace sextica {

/// Named conditions under which a closed-form pipeline divides by zero (or
/// otherwise cannot proceed) and reports instead of patching silently.
enum class DegeneracyKind {
    degenerate_v,
    degenerate_leading,
    degenerate_gamma4,
    all_gamma4_zero,
    zero_candidate_product,
    degenerate_shift,
    pipeline_inapplicable,
    nonfinite_intermediate,
};

inline const char* to_string(DegeneracyKind k) {
    switch (k) {
        case DegeneracyKind::degenerate_v: return "degenerate_v";
        case DegeneracyKind::degenerate_leading: return "degenerate_leading";
        case DegeneracyKind::degenerate_gamma4: return "degenerate_gamma4";
        case DegeneracyKind::all_gamma4_zero: return "all_gamma4_zero";
        case DegeneracyKind::zero_candidate_product: return "zero_candidate_product";
        case DegeneracyKind::degenerate_shift: return "degenerate_shift";
        case DegeneracyKind::pipeline_inapplicable: return "pipeline_inapplicable";
        case DegeneracyKind::nonfinite_intermediate: return "nonfinite_intermediate";
    }
    return "unknown";
}

struct DegeneracyError : std::runtime_error {
    DegeneracyKind kind;
    DegeneracyError(DegeneracyKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

/// How the closing quadratic's linear coefficient is formed: literally as
/// printed, or corrected to Vieta's sum for a monic sextic. The two modes
/// share the product relation; only the sum differs.
enum class S56Mode { paper, vieta };

inline const char* to_string(S56Mode m) { return m == S56Mode::paper ? "paper" : "vieta"; }

/// Branch decisions taken by a solve, for report output.
struct BranchFlags {
    std::string q_regime;              // "q_le_0" | "q_gt_0" | "q_zero" | ""
    int resolvent_seat = 0;            // which resolvent root seeded assembly
    bool biquadratic_path = false;     // Q = 0 family used
    bool zero_gamma4_excluded = false; // some Eq. 53 root was zero and dropped
    bool negative_seat_asymmetry = false;
};

/// Shifted-coefficient comparison for the degree-4-free substitution: the
/// Taylor-shift values (normative) next to the printed closed forms.
/// Index order: b, c, d, e, f, g of the shifted monic sextic.
struct T3CrossCheck {
    std::array<Complex, 6> taylor;
    std::array<Complex, 6> paper;

    std::array<double, 6> abs_diff() const {
        std::array<double, 6> out{};
        for (int i = 0; i < 6; ++i) out[i] = std::abs(taylor[i] - paper[i]);
        return out;
    }
};

}  // namespace sextica
