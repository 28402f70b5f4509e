#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace sextica {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct LeadingZero : ParseError {
    explicit LeadingZero(std::size_t pos) : ParseError("leading coefficient is zero", pos) {}
};

namespace detail {

// One token: a real, or a complex written as "a+bi" / "a-bi" / "bi" / "i".
inline Complex parse_token(std::string_view tok, std::size_t base) {
    std::string s;
    for (char ch : tok)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty coefficient", base);

    auto read_num = [&](const char* p, char** end) { return std::strtod(p, end); };

    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // pure imaginary: "i", "-i", "2.5i"
        double im;
        if (s.empty() || s == "+")
            im = 1.0;
        else if (s == "-")
            im = -1.0;
        else {
            // split off a real part if a +/- sign separates two numbers
            std::size_t split = std::string::npos;
            for (std::size_t k = 1; k < s.size(); ++k) {
                if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
                    split = k;  // keep the last such sign
            }
            if (split != std::string::npos) {
                char* end = nullptr;
                const double re = read_num(s.c_str(), &end);
                if (end != s.c_str() + split) throw ParseError("malformed complex number", base);
                std::string imag = s.substr(split);
                if (imag == "+") im = 1.0;
                else if (imag == "-") im = -1.0;
                else {
                    char* end2 = nullptr;
                    im = read_num(imag.c_str(), &end2);
                    if (end2 != imag.c_str() + imag.size())
                        throw ParseError("malformed imaginary part", base);
                }
                return {re, im};
            }
            char* end = nullptr;
            im = read_num(s.c_str(), &end);
            if (end != s.c_str() + s.size()) throw ParseError("malformed imaginary part", base);
        }
        return {0.0, im};
    }

    char* end = nullptr;
    const double re = read_num(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw ParseError("malformed number", base);
    return {re, 0.0};
}

}  // namespace detail

/// Comma-separated coefficients, highest degree first. Complex entries are
/// accepted as "re+imi" tokens. A zero leading coefficient is rejected.
inline Polynomial parse_poly(std::string_view text) {
    std::vector<Complex> coeffs;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        coeffs.push_back(detail::parse_token(tok, pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (coeffs.front() == Complex{}) throw LeadingZero(0);
    return Polynomial(std::move(coeffs));
}

}  // namespace sextica
