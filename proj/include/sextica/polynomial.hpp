#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "radicals.hpp"

namespace sextica {

struct ZeroLeadingCoefficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over Complex, coefficients stored highest
/// degree first. degree() == coefficient count - 1 always.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("Polynomial: empty coefficient list");
    }
    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.front(); }

    /// Coefficient of x^k.
    Complex coeff_of(int k) const { return coeffs_.at(coeffs_.size() - 1 - k); }

private:
    std::vector<Complex> coeffs_;
};

struct Evaluation {
    Complex value;  // p(x) by Horner, highest degree first
    double scale;   // sum |a_k| |x|^k, the backward-error denominator
};

inline Evaluation eval_with_scale(const Polynomial& p, Complex x) {
    Complex acc{};
    double scale = 0.0;
    const double ax = std::abs(x);
    for (Complex a : p.coeffs()) {
        acc = acc * x + a;
        scale = scale * ax + std::abs(a);
    }
    return {acc, scale};
}

inline Complex eval(const Polynomial& p, Complex x) { return eval_with_scale(p, x).value; }

/// Monic polynomial with exactly the given root multiset, built by
/// successive linear-factor multiplication.
inline Polynomial from_roots(std::span<const Complex> roots) {
    if (roots.empty()) throw std::invalid_argument("from_roots: no roots given");
    std::vector<Complex> c{Complex{1.0}};
    for (Complex r : roots) {
        c.push_back(Complex{});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
    }
    return Polynomial(std::move(c));
}

inline Polynomial from_roots(std::initializer_list<Complex> roots) {
    return from_roots(std::span<const Complex>(roots.begin(), roots.size()));
}

inline Polynomial make_monic(const Polynomial& p) {
    const Complex lead = p.leading();
    if (lead == Complex{}) throw ZeroLeadingCoefficient("make_monic: zero leading coefficient");
    std::vector<Complex> c = p.coeffs();
    c.front() = Complex{1.0};
    for (std::size_t i = 1; i < c.size(); ++i) c[i] /= lead;
    return Polynomial(std::move(c));
}

/// Taylor shift by repeated synthetic division: returns q with q(x) = p(x + s).
inline Polynomial shift(const Polynomial& p, Complex s) {
    std::vector<Complex> a = p.coeffs();
    const std::size_t n = a.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 1; i <= n - k; ++i) a[i] += s * a[i - 1];
    return Polynomial(std::move(a));
}

/// Monic sextic x^6 + b x^5 + c x^4 + d x^3 + e x^2 + f x + g.
struct MonicSextic {
    Complex b, c, d, e, f, g;

    static MonicSextic from(const Polynomial& p) {
        if (p.degree() != 6) throw std::invalid_argument("MonicSextic: degree must be 6");
        const Polynomial m = make_monic(p);
        const auto& a = m.coeffs();
        return {a[1], a[2], a[3], a[4], a[5], a[6]};
    }

    Polynomial poly() const { return Polynomial{Complex{1.0}, b, c, d, e, f, g}; }
};

}  // namespace sextica
