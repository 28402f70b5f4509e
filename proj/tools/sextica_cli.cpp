#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <sextica/parse.hpp>
#include <sextica/report.hpp>
#include <sextica/sweep.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 2;
constexpr int kExitSpurious = 3;
constexpr int kExitUsage = 64;

int solve_exit_code(const sextica::RunReport& run) {
    if (run.degeneracy) return kExitDegenerate;
    for (const auto& v : run.verdicts)
        if (v.status != sextica::RootVerdict::Status::verified) return kExitSpurious;
    if (run.verified_count < run.input.degree()) return kExitSpurious;
    return kExitOk;
}

int run_one_solve(const std::string& coeffs_text, const sextica::SolveOptions& opt,
                  const std::string& format, std::ostream& os) {
    sextica::Polynomial p{{sextica::Complex{1.0}}};
    try {
        p = sextica::parse_poly(coeffs_text);
    } catch (const sextica::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (p.degree() < 2 || p.degree() > 6) {
        std::cerr << "error: degree must be between 2 and 6, got " << p.degree() << "\n";
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    sextica::SolveArtifacts art;
    try {
        art = sextica::run_solve(p, opt);
    } catch (const sextica::PreconditionViolation& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
            .count();

    if (format == "text")
        os << sextica::to_text(art);
    else
        os << sextica::to_json(art, ns).dump() << "\n";
    return solve_exit_code(art.run);
}

int env_threads() {
    if (const char* v = std::getenv("SEXTICA_THREADS")) {
        const int n = std::atoi(v);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form cubic/quartic/sextic root solving with an iterative oracle and "
                 "per-candidate verification"};
    app.require_subcommand(1);

    // solve
    std::string coeffs, file, method = "auto", s56 = "paper", format = "json";
    double tol = 1e-6;
    bool all_seats = false;
    auto* solve = app.add_subcommand("solve", "solve one polynomial and verify every candidate");
    auto* coeffs_opt = solve->add_option("--coeffs", coeffs, "comma-separated coefficients, highest degree first");
    auto* file_opt = solve->add_option("--file", file, "read one coefficient list per line, emit JSON lines");
    solve->add_option("--method", method, "auto|t1|t2|t3|oracle")
        ->check(CLI::IsMember({"auto", "t1", "t2", "t3", "oracle"}));
    solve->add_option("--s56", s56, "closing-quadratic mode: paper|vieta")
        ->check(CLI::IsMember({"paper", "vieta"}));
    solve->add_option("--tol", tol, "residual tolerance for the verified status");
    solve->add_flag("--all-seats", all_seats, "evaluate all Gamma4 seats (sextic)");
    solve->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    // sweep
    sextica::SweepConfig cfg;
    std::string range = "-10,10", pipeline = "auto", sweep_s56 = "paper", sweep_format = "json";
    auto* sweep = app.add_subcommand("sweep", "seeded randomized sweep with aggregate report");
    sweep->add_option("--degree", cfg.degree, "3, 4 or 6")->required()->check(CLI::IsMember({3, 4, 6}));
    sweep->add_option("--count", cfg.count, "number of instances")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", cfg.seed, "64-bit seed")->required();
    sweep->add_option("--range", range, "coefficient interval lo,hi");
    sweep->add_flag("--all-seats", cfg.all_seats, "evaluate all Gamma4 seats (degree 6)");
    sweep->add_option("--s56", sweep_s56, "paper|vieta")->check(CLI::IsMember({"paper", "vieta"}));
    sweep->add_option("--pipeline", pipeline, "degree-6 pipeline override: auto|t2|t3")
        ->check(CLI::IsMember({"auto", "t2", "t3"}));
    sweep->add_option("--tol", cfg.tol.residual_tol, "residual tolerance for the verified status");
    sweep->add_option("--format", sweep_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (solve->parsed()) {
        if (coeffs_opt->count() == 0 && file_opt->count() == 0) {
            std::cerr << "error: solve needs --coeffs or --file\n";
            return kExitUsage;
        }
        sextica::SolveOptions opt;
        opt.method = method;
        opt.s56 = s56 == "vieta" ? sextica::S56Mode::vieta : sextica::S56Mode::paper;
        opt.all_seats = all_seats;
        opt.tol.residual_tol = tol;

        if (file_opt->count() > 0) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open " << file << "\n";
                return kExitUsage;
            }
            int worst = kExitOk;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                worst = std::max(worst, run_one_solve(line, opt, "json", std::cout));
            }
            return worst;
        }
        return run_one_solve(coeffs, opt, format, std::cout);
    }

    // sweep
    const std::size_t comma = range.find(',');
    if (comma == std::string::npos) {
        std::cerr << "error: --range expects lo,hi\n";
        return kExitUsage;
    }
    try {
        cfg.lo = std::stod(range.substr(0, comma));
        cfg.hi = std::stod(range.substr(comma + 1));
    } catch (const std::exception&) {
        std::cerr << "error: --range expects numbers lo,hi\n";
        return kExitUsage;
    }
    if (!(cfg.lo < cfg.hi)) {
        std::cerr << "error: empty coefficient range\n";
        return kExitUsage;
    }
    if (pipeline != "auto" && cfg.degree != 6) {
        std::cerr << "error: --pipeline applies to degree 6 only\n";
        return kExitUsage;
    }
    cfg.s56 = sweep_s56 == "vieta" ? sextica::S56Mode::vieta : sextica::S56Mode::paper;
    cfg.pipeline = pipeline;
    cfg.threads = env_threads();

    const sextica::SweepResult res = sextica::run_sweep(cfg);
    if (sweep_format == "csv")
        std::cout << sextica::sweep_csv(res);
    else
        std::cout << sextica::sweep_json(res).dump(2) << "\n";
    return kExitOk;
}
