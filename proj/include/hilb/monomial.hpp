#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

// A monomial in variables X_1..X_m, where X_i stands for the generator
// gamma_{i+1} and carries norm i.  Exponents stored densely; trailing zeros
// trimmed so equal monomials compare equal regardless of the ambient m.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_)
            if (e < 0) throw std::invalid_argument("negative exponent");
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    static Monomial variable(std::int64_t i, std::int64_t e = 1) {
        if (i < 1) throw std::invalid_argument("variable index must be >= 1");
        std::vector<std::int64_t> exps(static_cast<std::size_t>(i), 0);
        exps.back() = e;
        return Monomial(std::move(exps));
    }

    // Exponent of X_i (1-based).
    std::int64_t exponent(std::int64_t i) const {
        if (i < 1 || static_cast<std::size_t>(i - 1) >= exps_.size()) return 0;
        return exps_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<std::int64_t>& exponents() const { return exps_; }

    std::int64_t max_variable() const { return static_cast<std::int64_t>(exps_.size()); }

    std::int64_t norm() const {
        std::int64_t n = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) n += static_cast<std::int64_t>(i + 1) * exps_[i];
        return n;
    }

    std::int64_t degree() const {
        std::int64_t t = 0;
        for (auto e : exps_) t += e;
        return t;
    }

    bool is_one() const { return exps_.empty(); }

    Monomial times_variable(std::int64_t i) const {
        std::vector<std::int64_t> e = exps_;
        if (e.size() < static_cast<std::size_t>(i)) e.resize(static_cast<std::size_t>(i), 0);
        ++e[static_cast<std::size_t>(i - 1)];
        return Monomial(std::move(e));
    }

    // Divide by X_i; empty result when the exponent is zero.
    bool divisible_by_variable(std::int64_t i) const { return exponent(i) > 0; }
    Monomial divided_by_variable(std::int64_t i) const {
        if (!divisible_by_variable(i)) throw std::invalid_argument("monomial not divisible");
        std::vector<std::int64_t> e = exps_;
        --e[static_cast<std::size_t>(i - 1)];
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& o) const = default;
    auto operator<=>(const Monomial& o) const = default;

    // "X1^3*X2"; the empty product prints as "1".
    std::string to_string() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += "X" + std::to_string(i + 1);
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

    // Alphabet rendering, e.g. "x^3y" with names {"x","y",...}.
    std::string pretty(const std::vector<std::string>& names) const {
        if (exps_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (i >= names.size()) throw std::invalid_argument("monomial uses variable beyond alphabet");
            s += names[i];
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

private:
    std::vector<std::int64_t> exps_;
};

// All monomials of norm n in X_1..X_m, in descending lexicographic order on
// the exponent vector (e_1,...,e_m); matches the ordering of published
// relation arrays.  n = 0 yields the unit monomial.
inline std::vector<Monomial> enumerate_monomials(std::int64_t n, std::int64_t m) {
    if (n < 0) throw std::invalid_argument("enumerate_monomials: negative norm");
    if (m < 1) throw std::invalid_argument("enumerate_monomials: need at least one variable");
    std::vector<Monomial> out;
    std::vector<std::int64_t> exps(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, std::int64_t var, std::int64_t rem) -> void {
        if (var == m) {
            if (rem % m == 0) {
                exps[static_cast<std::size_t>(m - 1)] = rem / m;
                out.emplace_back(exps);
                exps[static_cast<std::size_t>(m - 1)] = 0;
            }
            return;
        }
        for (std::int64_t e = rem / var; e >= 0; --e) {
            exps[static_cast<std::size_t>(var - 1)] = e;
            self(self, var + 1, rem - var * e);
        }
        exps[static_cast<std::size_t>(var - 1)] = 0;
    };
    rec(rec, 1, n);
    return out;
}

// Variable display alphabets for the generator sets of A(d): x,y,z,w for
// d <= 8, letters from 'a' for larger d.
inline std::vector<std::string> generator_names(std::int64_t d) {
    const std::int64_t m = d / 2;
    std::vector<std::string> names;
    if (d <= 8) {
        const char* xs[] = {"x", "y", "z", "w"};
        for (std::int64_t i = 0; i < m; ++i) names.emplace_back(xs[i]);
    } else {
        for (std::int64_t i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    }
    return names;
}

}  // namespace hilb
