#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilb/numeric.hpp"

namespace hilb {

// Dense exact-rational matrix.  Column order is part of every contract here
// (pivot columns, kernel canonical form); no routine ever permutes columns.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& o) const = default;

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

inline std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Rational> out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

namespace detail {

// Integer working form: each row scaled by the (positive) lcm of its
// denominators.  Row scaling preserves rank, pivot columns and the kernel.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * l;
            rows[i][j] = v.get_num();  // exact: l is a common denominator
        }
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<Integer>> rows;  // row echelon, integer entries
    std::vector<std::size_t> pivot_cols;     // ascending
    int swap_sign = 1;
};

// Fraction-free (Bareiss) elimination.  Pivot: leftmost nonzero column,
// within it the candidate of largest absolute value, lowest row on ties.
inline Echelon echelon_bareiss(std::vector<std::vector<Integer>> w, std::size_t cols) {
    Echelon e;
    e.rows = std::move(w);
    const std::size_t rows = e.rows.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (e.rows[i][c] == 0) continue;
            if (best == rows || mpz_cmpabs(e.rows[i][c].get_mpz_t(), e.rows[best][c].get_mpz_t()) > 0)
                best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            std::swap(e.rows[best], e.rows[r]);
            e.swap_sign = -e.swap_sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                e.rows[i][j] = exact_div(e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j],
                                         prev, "fraction-free elimination");
            e.rows[i][c] = 0;
        }
        prev = e.rows[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

// Plain rational Gaussian elimination; reference path for cross-checking the
// fraction-free one.  Same pivot rule, compared by |numerator|.
inline std::pair<RationalMatrix, std::vector<std::size_t>> echelon_naive(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            if (best == m.rows() ||
                mpz_cmpabs(m.at(i, c).get_num().get_mpz_t(), m.at(best, c).get_num().get_mpz_t()) > 0)
                best = i;
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Kernel basis from an integer row echelon form: one vector per free column,
// free coordinate set to 1, pivot coordinates back-substituted.
inline std::vector<std::vector<Rational>> kernel_from_echelon(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (e.rows[k][j] != 0 && v[j] != 0) s += Rational(e.rows[k][j]) * v[j];
            v[pc] = -s / Rational(e.rows[k][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scale to integers with content 1.  The scale factor is positive, so the
// free coordinate (constructed as +1) stays positive.
inline std::vector<Rational> canonicalize_vector(std::vector<Rational> v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

}  // namespace detail

// Basis of the right kernel of M: reduced-echelon construction with each free
// variable set to 1 in column order, canonicalized to integer vectors of
// content 1.  Exactness is re-checked on every call (M*v = 0 and
// rank + nullity = cols) and any violation is raised.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    auto ech = detail::echelon_bareiss(detail::integer_rows(m), m.cols());
    auto basis = detail::kernel_from_echelon(ech, m.cols());
    for (auto& v : basis) v = detail::canonicalize_vector(std::move(v));
    if (basis.size() + ech.pivot_cols.size() != m.cols())
        throw std::logic_error("nullspace: rank-nullity violation");
    for (const auto& v : basis)
        for (const auto& entry : mat_vec(m, v))
            if (entry != 0) throw std::logic_error("nullspace: kernel vector fails M*v = 0");
    return basis;
}

inline std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
    return detail::echelon_bareiss(detail::integer_rows(m), m.cols()).pivot_cols;
}

inline std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

inline Integer determinant_integer(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("determinant: not square");
    if (n == 0) return 1;
    auto ech = detail::echelon_bareiss(rows, n);
    if (ech.pivot_cols.size() < n) return 0;
    // Bareiss keeps the last pivot equal to the determinant up to row swaps.
    return ech.swap_sign * ech.rows[n - 1][n - 1];
}

inline Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    Rational scale(1);
    const auto rows = detail::integer_rows(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        scale *= Rational(l);
    }
    return Rational(determinant_integer(rows)) / scale;
}

// One solution of M x = b, or empty if inconsistent.  Free variables are set
// to zero; the solution is unique exactly when the kernel is trivial.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                                  const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto ech = detail::echelon_bareiss(detail::integer_rows(aug), aug.cols());
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = ech.pivot_cols[k];
        if (pc == m.cols()) return std::nullopt;  // pivot in the augmented column
        Rational s(0);
        for (std::size_t j = pc + 1; j < m.cols(); ++j)
            if (ech.rows[k][j] != 0 && x[j] != 0) s += Rational(ech.rows[k][j]) * x[j];
        x[pc] = (Rational(ech.rows[k][m.cols()]) - s) / Rational(ech.rows[k][pc]);
    }
    const auto got = mat_vec(m, x);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (got[i] != b[i]) return std::nullopt;
    return x;
}

}  // namespace hilb
