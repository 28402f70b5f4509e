#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "report.hpp"
#include "rng.hpp"

namespace sextica {

struct SweepConfig {
    int degree = 4;  // 3, 4, or 6
    int count = 1;
    std::uint64_t seed = 1;
    double lo = -10.0, hi = 10.0;
    bool all_seats = false;
    S56Mode s56 = S56Mode::paper;
    std::string pipeline = "auto";  // auto | t2 | t3 (degree 6 only)
    int threads = 1;
    Tolerances tol{};
};

struct InstanceRecord {
    int index = 0;
    std::optional<DegeneracyKind> degeneracy;
    int verified_count = 0;
    std::vector<double> residuals;
    double max_residual = 0.0;
    bool duplicate = false;
    double oracle_match_distance = 0.0;
    double oracle_min_separation = 0.0;
    bool routed_t3 = false;
    std::array<double, 6> t3_diff{};
};

struct SweepResult {
    SweepConfig cfg;
    std::vector<InstanceRecord> records;
};

/// Coefficients uniform in [lo, hi); the leading coefficient is regenerated
/// until its magnitude reaches 0.1. A t3-forced sweep zeroes the x^5
/// coefficient so the pipeline's precondition holds by construction.
inline Polynomial sweep_instance(const SweepConfig& cfg, int index) {
    SplitMix64 rng = instance_rng(cfg.seed, static_cast<std::uint64_t>(index));
    std::vector<Complex> co(static_cast<std::size_t>(cfg.degree) + 1);
    for (auto& a : co) a = Complex{rng.uniform(cfg.lo, cfg.hi)};
    while (std::abs(co[0]) < 0.1) co[0] = Complex{rng.uniform(cfg.lo, cfg.hi)};
    if (cfg.pipeline == "t3" && cfg.degree == 6) co[1] = Complex{};
    return Polynomial(std::move(co));
}

inline InstanceRecord sweep_one(const SweepConfig& cfg, int index) {
    const Polynomial p = sweep_instance(cfg, index);
    SolveOptions opt;
    opt.method = cfg.degree == 6 ? cfg.pipeline : std::string("auto");
    opt.s56 = cfg.s56;
    opt.all_seats = cfg.all_seats;
    opt.tol = cfg.tol;

    InstanceRecord rec;
    rec.index = index;
    const SolveArtifacts art = run_solve(p, opt);
    rec.degeneracy = art.run.degeneracy;
    rec.verified_count = art.run.verified_count;
    for (const RootVerdict& v : art.run.verdicts) {
        rec.residuals.push_back(v.residual_rel);
        rec.max_residual = std::max(rec.max_residual, v.residual_rel);
    }
    rec.duplicate = art.run.duplicate_candidates;
    rec.oracle_match_distance = art.run.oracle_match_distance;

    double sep = 1e300;
    const auto& oroots = art.oracle.roots;
    for (std::size_t i = 0; i < oroots.size(); ++i)
        for (std::size_t j = i + 1; j < oroots.size(); ++j)
            sep = std::min(sep, std::abs(oroots[i] - oroots[j]));
    rec.oracle_min_separation = oroots.size() > 1 ? sep : 0.0;

    if (art.run.t3_crosscheck) {
        rec.routed_t3 = true;
        rec.t3_diff = art.run.t3_crosscheck->abs_diff();
    }
    return rec;
}

/// Runs all instances. Work is distributed over up to cfg.threads workers;
/// results land in an index-keyed vector and aggregation is index-ordered,
/// so the output bytes are independent of scheduling.
inline SweepResult run_sweep(const SweepConfig& cfg) {
    SweepResult out;
    out.cfg = cfg;
    out.records.resize(static_cast<std::size_t>(cfg.count));

    const int workers = std::max(1, std::min(cfg.threads, cfg.count));
    if (workers == 1) {
        for (int i = 0; i < cfg.count; ++i)
            out.records[static_cast<std::size_t>(i)] = sweep_one(cfg, i);
    } else {
        std::atomic<int> next{0};
        auto work = [&] {
            for (int i = next.fetch_add(1); i < cfg.count; i = next.fetch_add(1))
                out.records[static_cast<std::size_t>(i)] = sweep_one(cfg, i);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

inline double percentile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    const std::size_t idx = static_cast<std::size_t>(
        std::min<double>(static_cast<double>(sorted.size()) - 1.0,
                         q * static_cast<double>(sorted.size())));
    return sorted[idx];
}

/// Aggregate report: verified-rate histogram, degeneracy counts, residual
/// percentiles, duplicate rate, and (t3 sweeps) shifted-coefficient
/// discrepancy stats. Byte-identical for identical config; the thread count
/// is deliberately not part of the document.
inline ordered_json sweep_json(const SweepResult& res) {
    const SweepConfig& cfg = res.cfg;
    ordered_json doc;
    doc["config"] = {{"degree", cfg.degree},   {"count", cfg.count},
                     {"seed", cfg.seed},       {"range", {cfg.lo, cfg.hi}},
                     {"all_seats", cfg.all_seats}, {"s56_mode", to_string(cfg.s56)},
                     {"pipeline", cfg.pipeline}, {"residual_tol", cfg.tol.residual_tol}};

    std::vector<int> hist(static_cast<std::size_t>(cfg.degree) + 1, 0);
    std::map<std::string, int> degeneracies;
    std::vector<double> residuals;
    int duplicates = 0;
    int t3_count = 0;
    std::array<double, 6> t3_max{}, t3_sum{};
    for (const InstanceRecord& r : res.records) {
        if (r.degeneracy) ++degeneracies[to_string(*r.degeneracy)];
        const int v = std::min<int>(r.verified_count, cfg.degree);
        ++hist[static_cast<std::size_t>(v)];
        for (double x : r.residuals)
            if (std::isfinite(x)) residuals.push_back(x);
        duplicates += r.duplicate ? 1 : 0;
        if (r.routed_t3) {
            ++t3_count;
            for (int i = 0; i < 6; ++i) {
                t3_max[static_cast<std::size_t>(i)] =
                    std::max(t3_max[static_cast<std::size_t>(i)], r.t3_diff[static_cast<std::size_t>(i)]);
                t3_sum[static_cast<std::size_t>(i)] += r.t3_diff[static_cast<std::size_t>(i)];
            }
        }
    }
    doc["instances"] = cfg.count;
    doc["verified_histogram"] = hist;
    ordered_json dj;
    for (const auto& [k, v] : degeneracies) dj[k] = v;
    doc["degeneracies"] = dj;

    std::sort(residuals.begin(), residuals.end());
    doc["residual_percentiles"] = {
        {"p50", percentile(residuals, 0.50)},
        {"p90", percentile(residuals, 0.90)},
        {"p99", percentile(residuals, 0.99)},
        {"max", residuals.empty() ? 0.0 : residuals.back()}};
    doc["duplicate_rate"] =
        cfg.count > 0 ? static_cast<double>(duplicates) / cfg.count : 0.0;

    if (t3_count > 0) {
        static const char* names[6] = {"b", "c", "d", "e", "f", "g"};
        ordered_json mx, mean;
        for (int i = 0; i < 6; ++i) {
            mx[names[i]] = t3_max[static_cast<std::size_t>(i)];
            mean[names[i]] = t3_sum[static_cast<std::size_t>(i)] / t3_count;
        }
        doc["t3_crosscheck"] = {{"instances", t3_count}, {"max_abs_diff", mx}, {"mean_abs_diff", mean}};
    } else {
        doc["t3_crosscheck"] = nullptr;
    }
    return doc;
}

inline std::string sweep_csv(const SweepResult& res) {
    std::string out = "index,degeneracy,verified_count,max_residual,duplicate,oracle_match_distance\n";
    for (const InstanceRecord& r : res.records) {
        out += std::to_string(r.index);
        out += ',';
        out += r.degeneracy ? to_string(*r.degeneracy) : "";
        out += ',';
        out += std::to_string(r.verified_count);
        out += ',';
        out += format_double(r.max_residual);
        out += ',';
        out += r.duplicate ? '1' : '0';
        out += ',';
        out += format_double(r.oracle_match_distance);
        out += '\n';
    }
    return out;
}

}  // namespace sextica
