#pragma once

#include <algorithm>
#include <vector>

#include "polynomial.hpp"

namespace sextica {

// Independent iterative root finder. Deliberately knows nothing about the
// closed-form modules; only polynomial evaluation is shared.

struct OracleConfig {
    double tol = 1e-9;   // max relative step at which iteration stops
    int max_iter = 500;
    bool polish = true;  // Newton refinement pass per root
};

struct OracleResult {
    std::vector<Complex> roots;
    bool converged = false;
    int iterations = 0;
    std::vector<bool> clustered;  // pairwise distance < 100 * tol
};

struct RefineResult {
    Complex value;
    double residual = 0.0;  // |p(x)| at the returned value
    bool improved = false;
    int iterations = 0;
};

inline Complex eval_derivative(const Polynomial& p, Complex x) {
    const auto& a = p.coeffs();
    const int n = p.degree();
    Complex acc{};
    for (int k = 0; k < n; ++k) acc = acc * x + a[static_cast<std::size_t>(k)] * double(n - k);
    return acc;
}

/// Newton iteration from x0; stops on small step, residual stagnation, or
/// the iteration cap, and never returns a worse point than it was given.
inline RefineResult refine(const Polynomial& p, Complex x0, const OracleConfig& cfg = {}) {
    RefineResult out{x0, std::abs(eval(p, x0)), false, 0};
    Complex x = x0;
    double best = out.residual;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const Complex fx = eval(p, x);
        const Complex dfx = eval_derivative(p, x);
        if (dfx == Complex{}) break;
        const Complex step = fx / dfx;
        x -= step;
        out.iterations = it + 1;
        const double r = std::abs(eval(p, x));
        if (r < best) {
            best = r;
            out.value = x;
            out.improved = true;
        } else {
            break;  // stagnated
        }
        if (std::abs(step) <= cfg.tol * std::max(1.0, std::abs(x))) break;
    }
    out.residual = best;
    return out;
}

/// Simultaneous-correction (Weierstrass) iteration for all roots at once.
/// Initial guesses sit on a circle of Cauchy-bound radius with a fixed
/// 0.4 rad offset, so real-coefficient inputs do not start on the symmetry
/// axis. Fully deterministic.
inline OracleResult find_roots(const Polynomial& p, const OracleConfig& cfg = {}) {
    const int n = p.degree();
    if (n < 1 || p.leading() == Complex{})
        throw std::invalid_argument("find_roots: degree >= 1 with nonzero leading required");
    OracleResult out;
    if (n == 1) {
        out.roots.push_back(-p.coeffs()[1] / p.coeffs()[0]);
        out.converged = true;
        out.clustered.assign(1, false);
        return out;
    }

    const Complex an = p.leading();
    double radius = 0.0;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        radius = std::max(radius, std::abs(p.coeffs()[k] / an));
    radius = 1.0 + radius;

    std::vector<Complex>& x = out.roots;
    x.resize(static_cast<std::size_t>(n));
    constexpr double offset = 0.4;
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] =
            std::polar(radius, offset + 2.0 * 3.141592653589793 * i / n);

    for (int it = 0; it < cfg.max_iter; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom = an;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            if (denom == Complex{}) continue;  // coincident iterates; next sweep separates
            const Complex dr = eval(p, x[static_cast<std::size_t>(i)]) / denom;
            x[static_cast<std::size_t>(i)] -= dr;
            max_step = std::max(max_step,
                                std::abs(dr) / std::max(1.0, std::abs(x[static_cast<std::size_t>(i)])));
        }
        out.iterations = it + 1;
        if (max_step <= cfg.tol) {
            out.converged = true;
            break;
        }
    }

    if (cfg.polish)
        for (auto& xi : x) xi = refine(p, xi, cfg).value;

    const double cluster_tol = 100.0 * cfg.tol;
    out.clustered.assign(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) < cluster_tol) {
                out.clustered[static_cast<std::size_t>(i)] = true;
                out.clustered[static_cast<std::size_t>(j)] = true;
            }
    return out;
}

}  // namespace sextica
