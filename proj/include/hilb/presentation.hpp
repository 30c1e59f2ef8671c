#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hilb/algebra.hpp"
#include "hilb/matrix.hpp"
#include "hilb/monomial.hpp"

namespace hilb {

// One homogeneous relation among the generators gamma_2..gamma_{m+1}: a
// coefficient vector over the norm-n monomial list (fixed enumeration order),
// canonicalized to integers of content 1; evaluates to zero in A(d).
struct RelationVector {
    std::int64_t norm = 0;
    std::vector<Rational> coefficients;

    bool operator==(const RelationVector& o) const = default;
};

struct PresentationResult {
    int d = 1;
    std::int64_t m = 0;                                          // floor(d/2)
    std::map<std::int64_t, std::vector<RelationVector>> relations;  // norm -> minimal set
    std::map<std::int64_t, std::int64_t> counts;                 // r_{d,n}, nonzero norms only
    std::int64_t total = 0;

    std::int64_t count_at(std::int64_t n) const {
        auto it = counts.find(n);
        return it == counts.end() ? 0 : it->second;
    }
};

// The basis-expansion matrix A^n: rows indexed by the norm-n classes of A(d),
// columns by the norm-n monomials in X_1..X_m; entry (b, mon) is the
// coefficient of g_b in the expansion of mon.
inline RationalMatrix expansion_matrix(int d, std::int64_t n, ThetaCache& cache = theta_cache()) {
    if (n < 1) throw std::invalid_argument("expansion_matrix: norm must be >= 1");
    const std::int64_t m = d / 2;
    if (m < 1) throw std::invalid_argument("expansion_matrix: no generators for d < 2");
    const auto classes = enumerate_classes(n, d);
    const auto monomials = enumerate_monomials(n, m);
    std::map<CycleType, std::size_t> row_of;
    for (std::size_t i = 0; i < classes.size(); ++i) row_of.emplace(classes[i], i);
    RationalMatrix a(classes.size(), monomials.size());
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        const AlgebraElement value = monomial_expand(monomials[j], d, cache);
        for (const auto& [lambda, c] : value.terms()) {
            auto it = row_of.find(lambda);
            if (it == row_of.end())
                throw std::logic_error("expansion term of unexpected norm or support");
            a.at(it->second, j) = c;
        }
    }
    return a;
}

// A spanning set for the norm-n relations: the kernel of A^n.
inline std::vector<RelationVector> sufficient_relations(int d, std::int64_t n,
                                                        ThetaCache& cache = theta_cache()) {
    std::vector<RelationVector> out;
    for (auto& v : nullspace(expansion_matrix(d, n, cache)))
        out.push_back(RelationVector{n, std::move(v)});
    return out;
}

// The 0/1 matrix taking the norm-k monomial m' to the norm-(k+i) monomial
// X_i * m'; every column has exactly one 1.
inline RationalMatrix conversion_matrix(int d, std::int64_t i, std::int64_t k) {
    const std::int64_t m = d / 2;
    if (i < 1 || i > m) throw std::invalid_argument("conversion_matrix: variable index out of range");
    if (k < 1 || k > d + m - i) throw std::invalid_argument("conversion_matrix: norm out of range");
    const auto rows = enumerate_monomials(k + i, m);
    const auto cols = enumerate_monomials(k, m);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
    RationalMatrix c(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto it = row_of.find(cols[j].times_variable(i));
        if (it == row_of.end()) throw std::logic_error("conversion target monomial missing");
        c.at(it->second, j) = 1;
    }
    return c;
}

// Minimal-presentation pipeline: per norm, a sufficient relation set from
// the kernel; lifted relations (generator multiples of lower-norm relations)
// first, then the fresh kernel vectors; the pivot columns landing in the
// fresh block are the minimal relations.  Norms are scanned through d + m,
// beyond which no minimal relation can occur.
inline PresentationResult minimal_presentation(int d, ThetaCache& cache = theta_cache(),
                                               unsigned threads = 1) {
    if (d < 1) throw std::invalid_argument("minimal_presentation: d must be >= 1");
    PresentationResult res;
    res.d = d;
    res.m = d / 2;
    res.total = 0;
    if (d == 1) return res;

    const std::int64_t top = d + res.m;
    std::vector<std::vector<RelationVector>> sufficient(static_cast<std::size_t>(top) + 1);

    if (threads <= 1) {
        for (std::int64_t n = 2; n <= top; ++n)
            sufficient[static_cast<std::size_t>(n)] = sufficient_relations(d, n, cache);
    } else {
        std::atomic<std::int64_t> next{2};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::int64_t n = next++; n <= top; n = next++)
                        sufficient[static_cast<std::size_t>(n)] = sufficient_relations(d, n, cache);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (std::int64_t n = 2; n <= top; ++n) {
        const auto& fresh = sufficient[static_cast<std::size_t>(n)];
        const auto monomials = enumerate_monomials(n, res.m);

        std::vector<std::vector<Rational>> lifted;
        for (std::int64_t i = 1; i <= res.m; ++i) {
            const std::int64_t k = n - i;
            if (k < 2) continue;
            const auto& lower = sufficient[static_cast<std::size_t>(k)];
            if (lower.empty()) continue;
            const RationalMatrix conv = conversion_matrix(d, i, k);
            for (const auto& r : lower) {
                auto v = mat_vec(conv, r.coefficients);
                if (std::find(lifted.begin(), lifted.end(), v) == lifted.end())
                    lifted.push_back(std::move(v));
            }
        }

        if (fresh.empty()) continue;
        RationalMatrix w(monomials.size(), lifted.size() + fresh.size());
        for (std::size_t c = 0; c < lifted.size(); ++c)
            for (std::size_t r = 0; r < monomials.size(); ++r) w.at(r, c) = lifted[c][r];
        for (std::size_t c = 0; c < fresh.size(); ++c)
            for (std::size_t r = 0; r < monomials.size(); ++r)
                w.at(r, lifted.size() + c) = fresh[c].coefficients[r];

        std::vector<RelationVector> minimal;
        for (auto p : pivot_columns(w))
            if (p >= lifted.size()) minimal.push_back(fresh[p - lifted.size()]);
        if (!minimal.empty()) {
            res.counts[n] = static_cast<std::int64_t>(minimal.size());
            res.total += static_cast<std::int64_t>(minimal.size());
            res.relations.emplace(n, std::move(minimal));
        }
    }
    return res;
}

// Dimensions of the indecomposables A(d)+/A(d)+^2 per norm: the norm-j basis
// count minus the rank of the span of products, i.e. of the expansion matrix
// restricted to monomials of degree >= 2.
inline std::map<std::int64_t, std::int64_t> indecomposables_dims(int d,
                                                                 ThetaCache& cache = theta_cache()) {
    std::map<std::int64_t, std::int64_t> dims;
    if (d < 2) return dims;
    const std::int64_t m = d / 2;
    for (std::int64_t j = 1; j <= d - 1; ++j) {
        const auto classes = enumerate_classes(j, d);
        std::int64_t decomposable_rank = 0;
        if (j >= 2) {
            const auto monomials = enumerate_monomials(j, m);
            std::vector<std::size_t> keep;
            for (std::size_t c = 0; c < monomials.size(); ++c)
                if (monomials[c].degree() >= 2) keep.push_back(c);
            const RationalMatrix a = expansion_matrix(d, j, cache);
            RationalMatrix sub(a.rows(), keep.size());
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < keep.size(); ++c) sub.at(r, c) = a.at(r, keep[c]);
            decomposable_rank = static_cast<std::int64_t>(rank(sub));
        }
        dims[j] = static_cast<std::int64_t>(classes.size()) - decomposable_rank;
    }
    return dims;
}

}  // namespace hilb
