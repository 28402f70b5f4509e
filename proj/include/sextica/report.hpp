#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "driver.hpp"

namespace sextica {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

/// Shortest round-trip decimal for a double (std::to_chars).
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex z) {
    std::string s = format_double(z.real());
    if (z.imag() != 0.0) {
        s += z.imag() < 0.0 ? "-" : "+";
        s += format_double(std::abs(z.imag()));
        s += "i";
    }
    return s;
}

inline ordered_json to_json(const T3CrossCheck& cc) {
    static const char* names[6] = {"b", "c", "d", "e", "f", "g"};
    ordered_json taylor, paper, diff;
    const auto d = cc.abs_diff();
    for (int i = 0; i < 6; ++i) {
        taylor[names[i]] = to_json(cc.taylor[static_cast<std::size_t>(i)]);
        paper[names[i]] = to_json(cc.paper[static_cast<std::size_t>(i)]);
        diff[names[i]] = d[static_cast<std::size_t>(i)];
    }
    return {{"taylor", taylor}, {"paper", paper}, {"abs_diff", diff}};
}

/// The single-solve report document. Field order is fixed; floats are
/// shortest round-trip decimals; timing_ns can be suppressed for
/// byte-comparison purposes.
inline ordered_json to_json(const SolveArtifacts& art, std::int64_t timing_ns,
                            bool with_timing = true) {
    const RunReport& run = art.run;
    ordered_json doc;

    ordered_json coeffs = ordered_json::array();
    for (Complex a : run.input.coeffs()) coeffs.push_back(to_json(a));
    doc["input"] = {{"coeffs", coeffs}, {"degree", run.input.degree()}};
    doc["method_path"] = run.method_path;
    doc["branch_flags"] = {{"q_regime", run.flags.q_regime},
                           {"resolvent_seat", run.flags.resolvent_seat},
                           {"biquadratic_path", run.flags.biquadratic_path},
                           {"zero_gamma4_excluded", run.flags.zero_gamma4_excluded},
                           {"negative_seat_asymmetry", run.flags.negative_seat_asymmetry}};

    ordered_json cands = ordered_json::array();
    for (const RootVerdict& v : run.verdicts) {
        ordered_json c = {{"re", v.value.real()},
                          {"im", v.value.imag()},
                          {"residual", v.residual_rel},
                          {"status", to_string(v.status)}};
        c["oracle_match"] = v.matched_oracle ? to_json(*v.matched_oracle) : ordered_json(nullptr);
        c["distance"] = v.distance ? ordered_json(*v.distance) : ordered_json(nullptr);
        cands.push_back(c);
    }
    doc["candidates"] = cands;

    if (art.reduction) {
        const SexticReduction& red = *art.reduction;
        ordered_json inter;
        inter["pipeline"] = to_string(red.pipeline);
        inter["V"] = to_json(red.V);
        inter["gamma4"] = to_json(red.gamma4);
        ordered_json all = ordered_json::array();
        for (Complex gm : red.gamma4_all) all.push_back(to_json(gm));
        inter["gamma4_all"] = all;
        inter["lambda"] = {to_json(red.lambda[0]), to_json(red.lambda[1]), to_json(red.lambda[2]),
                           to_json(red.lambda[3])};
        inter["quartic_coeffs"] = {to_json(red.quartic_coeffs[0]), to_json(red.quartic_coeffs[1]),
                                   to_json(red.quartic_coeffs[2]), to_json(red.quartic_coeffs[3])};
        inter["alpha1"] = to_json(red.alphas.a1);
        inter["alpha2"] = to_json(red.alphas.a2);
        inter["alpha3"] = to_json(red.alphas.a3);
        inter["alpha4"] = to_json(red.alphas.a4);
        inter["shift"] = to_json(red.shift);
        doc["intermediates"] = inter;
    }

    ordered_json oracle;
    ordered_json oroots = ordered_json::array();
    for (Complex r : art.oracle.roots) oroots.push_back(to_json(r));
    oracle["roots"] = oroots;
    oracle["converged"] = art.oracle.converged;
    oracle["iterations"] = art.oracle.iterations;
    ordered_json clustered = ordered_json::array();
    for (bool c : art.oracle.clustered) clustered.push_back(c);
    oracle["clustered"] = clustered;
    doc["oracle"] = oracle;

    doc["t3_crosscheck"] = run.t3_crosscheck ? to_json(*run.t3_crosscheck) : ordered_json(nullptr);
    doc["degeneracy"] =
        run.degeneracy ? ordered_json(to_string(*run.degeneracy)) : ordered_json(nullptr);
    doc["verified_count"] = run.verified_count;
    doc["s56_mode"] = to_string(run.s56_mode);
    doc["duplicate_candidates"] = run.duplicate_candidates;
    if (with_timing) doc["timing_ns"] = timing_ns;
    return doc;
}

inline std::string to_text(const SolveArtifacts& art) {
    const RunReport& run = art.run;
    std::ostringstream os;
    os << "method: " << run.method_path << "\n";
    if (run.degeneracy) os << "degeneracy: " << to_string(*run.degeneracy) << "\n";
    os << "candidates (" << run.verdicts.size() << "):\n";
    for (const RootVerdict& v : run.verdicts) {
        os << "  " << format_complex(v.value) << "  residual=" << format_double(v.residual_rel)
           << "  " << to_string(v.status);
        if (v.distance) os << "  oracle_distance=" << format_double(*v.distance);
        os << "\n";
    }
    os << "verified: " << run.verified_count << "\n";
    os << "oracle roots:";
    for (Complex r : art.oracle.roots) os << " " << format_complex(r);
    os << "\n";
    if (run.t3_crosscheck) {
        static const char* names[6] = {"b", "c", "d", "e", "f", "g"};
        const auto d = run.t3_crosscheck->abs_diff();
        os << "t3 crosscheck (taylor | printed | abs diff):\n";
        for (int i = 0; i < 6; ++i)
            os << "  " << names[i] << ": "
               << format_complex(run.t3_crosscheck->taylor[static_cast<std::size_t>(i)]) << " | "
               << format_complex(run.t3_crosscheck->paper[static_cast<std::size_t>(i)]) << " | "
               << format_double(d[static_cast<std::size_t>(i)]) << "\n";
    }
    return os.str();
}

}  // namespace sextica
