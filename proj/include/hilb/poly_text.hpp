#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilb/monomial.hpp"
#include "hilb/numeric.hpp"

namespace hilb {

// Parser for relation polynomials in single-letter variables, e.g.
// "x^3-4xy", "17x^6 - 135x^4y", "10^7de".  Multiplication is implicit ('*'
// is also accepted); numeric factors may carry an exponent.  Returns merged
// (monomial, coefficient) terms with zero coefficients dropped.
inline std::vector<std::pair<Monomial, Integer>> parse_polynomial(
    const std::string& text, const std::vector<std::string>& names) {
    std::map<char, std::int64_t> var_of;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].size() != 1)
            throw std::invalid_argument("polynomial alphabet must be single letters");
        var_of[names[i][0]] = static_cast<std::int64_t>(i) + 1;
    }

    std::map<Monomial, Integer> acc;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_uint = [&]() -> unsigned long {
        unsigned long v = 0;
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected digits at position " + std::to_string(i) +
                                        " in: " + text);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (v > (~0ul - 9) / 10) throw std::overflow_error("exponent/coefficient digit overflow");
            v = v * 10 + static_cast<unsigned long>(text[i] - '0');
            ++i;
        }
        return v;
    };

    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    while (i < text.size()) {
        int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        Integer coeff = sign;
        std::vector<std::int64_t> exps(names.size(), 0);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            if (i == text.size() || text[i] == '+' || text[i] == '-') break;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                Integer base;
                const std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                base = Integer(text.substr(start, i - start));
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    const unsigned long e = read_uint();
                    Integer p;
                    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
                    base = p;
                }
                coeff *= base;
                saw_factor = true;
                continue;
            }
            const char ch = text[i];
            auto it = var_of.find(ch);
            if (it == var_of.end())
                throw std::invalid_argument(std::string("unknown symbol '") + ch + "' in: " + text);
            ++i;
            unsigned long e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = read_uint();
            }
            exps[static_cast<std::size_t>(it->second - 1)] += static_cast<std::int64_t>(e);
            saw_factor = true;
        }
        if (!saw_factor) throw std::invalid_argument("dangling sign in: " + text);
        Monomial mon{std::move(exps)};
        auto [slot, inserted] = acc.emplace(std::move(mon), coeff);
        if (!inserted) slot->second += coeff;
        skip_ws();
    }

    std::vector<std::pair<Monomial, Integer>> out;
    for (auto& [mon, c] : acc)
        if (c != 0) out.emplace_back(mon, std::move(c));
    return out;
}

}  // namespace hilb
