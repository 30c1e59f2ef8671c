#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hilb/algebra.hpp"
#include "hilb/matrix.hpp"
#include "hilb/presentation.hpp"

namespace hilb {

inline Integer catalan(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    return exact_div(binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n)),
                     Integer(n + 1), "catalan");
}

// Borel triangle: B(n,k) = binom(2n+2, n-k) * binom(n+k, n) / (n+1),
// defined for 0 <= k <= n; B(n,0) is the Catalan number C_{n+1}.
inline Integer borel(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("borel: index out of range");
    return exact_div(binomial(static_cast<unsigned long>(2 * n + 2), static_cast<unsigned long>(n - k)) *
                         binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(n)),
                     Integer(n + 1), "borel");
}

// Row n of the Borel triangle, (B(n,0), ..., B(n,n)).
inline std::vector<Integer> borel_row(std::int64_t n) {
    std::vector<Integer> row;
    for (std::int64_t k = 0; k <= n; ++k) row.push_back(borel(n, k));
    return row;
}

// The stacked-Pascal array X with X(i,j) = binom(i+1, j-i+1), 1-based.
inline Integer pascal_entry(std::int64_t i, std::int64_t j) {
    if (i < 1 || j < 1) throw std::invalid_argument("pascal_entry: 1-based indices");
    const std::int64_t k = j - i + 1;
    if (k < 0) return 0;
    return binomial(static_cast<unsigned long>(i + 1), static_cast<unsigned long>(k));
}

// Exact determinant of the top-left n x n minor of X; equals C_{n+1}.
inline Integer pascal_minor_det(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("pascal_minor_det: n must be >= 1");
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n),
                                           std::vector<Integer>(static_cast<std::size_t>(n)));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= n; ++j)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = pascal_entry(i, j);
    return determinant_integer(rows);
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Row-reduction schedule on X: once row n is in final form, row n+1 is
// replaced by B(n,0)*row(n+1) - row(n).  Checks that row n then carries the
// Borel numbers B(n,0..n) in columns n..2n and zeros elsewhere.
inline CheckResult verify_echelon_borel(std::int64_t n_max) {
    CheckResult res{"borel-echelon-rows", true, ""};
    const std::int64_t cols = 2 * (n_max + 1);
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n_max + 2));
    for (std::int64_t i = 1; i <= n_max + 1; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(cols + 1));
        for (std::int64_t j = 1; j <= cols; ++j) row[static_cast<std::size_t>(j)] = pascal_entry(i, j);
    }
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n)];
        for (std::int64_t j = 1; j <= cols; ++j) {
            const Integer expected =
                (j >= n && j <= 2 * n) ? borel(n, j - n) : Integer(0);
            if (row[static_cast<std::size_t>(j)] != expected) {
                std::ostringstream ss;
                ss << "row " << n << " column " << j << ": got "
                   << row[static_cast<std::size_t>(j)].get_str() << ", expected "
                   << expected.get_str();
                return {res.name, false, ss.str()};
            }
        }
        if (borel(n, 0) != catalan(n + 1))
            return {res.name, false, "B(n,0) != C(n+1) at n = " + std::to_string(n)};
        auto& next = rows[static_cast<std::size_t>(n + 1)];
        const Integer lead = borel(n, 0);
        for (std::int64_t j = 1; j <= cols; ++j)
            next[static_cast<std::size_t>(j)] =
                lead * next[static_cast<std::size_t>(j)] - row[static_cast<std::size_t>(j)];
    }
    return res;
}

inline SuiteReport pascal_suite(std::int64_t n_max = 12) {
    SuiteReport report{"pascal", {}};
    bool dets_ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (pascal_minor_det(n) != catalan(n + 1)) {
            dets_ok = false;
            detail = "first failure at n = " + std::to_string(n);
            break;
        }
    report.add("pascal-minor-determinants-are-catalan", dets_ok, detail);
    report.checks.push_back(verify_echelon_borel(n_max));
    bool rec_ok = true;
    std::string rec_detail;
    for (std::int64_t n = 1; n <= n_max && rec_ok; ++n)
        for (std::int64_t k = 1; k <= n; ++k)
            if (borel(n, 0) * binomial(static_cast<unsigned long>(n + 2),
                                       static_cast<unsigned long>(k)) -
                    borel(n, k) !=
                borel(n + 1, k - 1)) {
                rec_ok = false;
                rec_detail = "(n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")";
                break;
            }
    report.add("borel-elimination-recurrence", rec_ok, rec_detail);
    return report;
}

// Expansion of the products y_s = delta_s * gamma_{j+1-s}: the coefficient of
// the basis class (s-r transpositions joined into the cycle) is
// ((j+1-r)/(j+1-s)) * binom(j+1-s, s-r).  Checked coefficient-by-coefficient
// against the algebra product in A(h).
inline CheckResult ys_expansion_check(std::int64_t j, int h, ThetaCache& cache = theta_cache()) {
    std::ostringstream name;
    name << "ys-expansion j=" << j << " h=" << h;
    if (j < 2 || h < 2 * j + 2)
        return {name.str(), false, "requires j >= 2 and h >= 2j+2"};
    for (std::int64_t s = 1; s <= j - 1; ++s) {
        const AlgebraElement lhs = multiply(delta(s, h), gamma(j + 1 - s, h), cache);
        AlgebraElement rhs = unit(h) * Rational(0);
        for (std::int64_t r = 0; r <= j - 1 && r <= s; ++r) {
            const Rational a_rs = make_rational(Integer(j + 1 - r), Integer(j + 1 - s)) *
                                  Rational(binomial(static_cast<unsigned long>(j + 1 - s),
                                                    static_cast<unsigned long>(s - r)));
            if (a_rs == 0) continue;
            if (r <= j - 2) {
                CycleType lam = CycleType::transpositions(r).with_count_changed(j + 1 - r, +1);
                rhs += basis(lam, h) * a_rs;
            } else {
                rhs += delta(j, h) * (a_rs * Rational(j));  // g(2^{j-1},2) stands for j*delta_j
            }
        }
        if (!(lhs == rhs)) {
            std::ostringstream ss;
            ss << "mismatch at s = " << s << ": product " << lhs.to_string() << " vs formula "
               << rhs.to_string();
            return {name.str(), false, ss.str()};
        }
    }
    return {name.str(), true, ""};
}

inline SuiteReport ys_suite(std::int64_t j_max = 5, int h_max = 12, ThetaCache& cache = theta_cache()) {
    SuiteReport report{"ys", {}};
    for (std::int64_t j = 2; j <= j_max; ++j)
        for (int h = static_cast<int>(2 * j + 2); h <= h_max; ++h)
            report.checks.push_back(ys_expansion_check(j, h, cache));
    return report;
}

// The alternating Catalan-weighted relation
//   sum_{s=1}^{m} (-1)^s s C_{m-s} delta_s gamma_{m+2-s} = 0  in A(2m),
// checked exactly, plus its nontriviality: rewritten as a polynomial in the
// minimal generators it has a nonzero X1^{m+1} coefficient.
inline CheckResult mixed_relation_check(std::int64_t m, ThetaCache& cache = theta_cache()) {
    std::ostringstream name;
    name << "mixed-catalan-relation m=" << m;
    if (m < 1) return {name.str(), false, "requires m >= 1"};
    const int d = static_cast<int>(2 * m);

    AlgebraElement sum = unit(d) * Rational(0);
    for (std::int64_t s = 1; s <= m; ++s) {
        const Rational weight = Rational((s % 2 == 0 ? 1 : -1) * s) * Rational(catalan(m - s));
        sum += multiply(delta(s, d), gamma(m + 2 - s, d), cache) * weight;
    }
    if (!sum.is_zero())
        return {name.str(), false, "sum is nonzero: " + sum.to_string()};

    // delta_s as a polynomial in the generators: unique below the first
    // relation norm, so solve the expansion system directly.
    std::vector<Rational> relation_poly(enumerate_monomials(m + 1, m).size(), Rational(0));
    const auto top_monomials = enumerate_monomials(m + 1, m);
    for (std::int64_t s = 1; s <= m; ++s) {
        const auto classes = enumerate_classes(s, d);
        std::vector<Rational> target(classes.size(), Rational(0));
        const CycleType delta_class = CycleType::transpositions(s);
        for (std::size_t r = 0; r < classes.size(); ++r)
            if (classes[r] == delta_class) target[r] = 1;
        const auto poly = solve(expansion_matrix(d, s, cache), target);
        if (!poly) return {name.str(), false, "delta rewrite system inconsistent"};
        const Rational weight = Rational((s % 2 == 0 ? 1 : -1) * s) * Rational(catalan(m - s));
        const auto lower = enumerate_monomials(s, m);
        for (std::size_t c = 0; c < lower.size(); ++c) {
            if ((*poly)[c] == 0) continue;
            const Monomial shifted = lower[c].times_variable(m + 1 - s);
            const auto it = std::find(top_monomials.begin(), top_monomials.end(), shifted);
            if (it == top_monomials.end())
                return {name.str(), false, "lifted monomial missing from norm m+1 list"};
            relation_poly[static_cast<std::size_t>(it - top_monomials.begin())] +=
                weight * (*poly)[c];
        }
    }
    const Monomial x1_power = Monomial::variable(1, m + 1);
    const auto it = std::find(top_monomials.begin(), top_monomials.end(), x1_power);
    if (it == top_monomials.end() ||
        relation_poly[static_cast<std::size_t>(it - top_monomials.begin())] == 0)
        return {name.str(), false, "rewritten relation has zero X1^{m+1} coefficient"};
    for (const auto& entry : mat_vec(expansion_matrix(d, m + 1, cache), relation_poly))
        if (entry != 0)
            return {name.str(), false, "rewritten relation does not evaluate to zero"};
    return {name.str(), true, ""};
}

inline SuiteReport mixed_suite(std::int64_t m_max = 5, ThetaCache& cache = theta_cache()) {
    SuiteReport report{"mixed", {}};
    for (std::int64_t m = 1; m <= m_max; ++m) report.checks.push_back(mixed_relation_check(m, cache));
    return report;
}

}  // namespace hilb
