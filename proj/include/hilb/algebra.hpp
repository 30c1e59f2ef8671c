#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hilb/cycle_type.hpp"
#include "hilb/monomial.hpp"
#include "hilb/numeric.hpp"
#include "hilb/theta.hpp"

namespace hilb {

// An element of A(d): sparse rational combination of class-sum basis elements
// g_lambda, tagged with the ambient degree d.  Terms of mixed norm are
// allowed; keys always satisfy supp(lambda) <= d and zero coefficients are
// never stored.
class AlgebraElement {
public:
    using TermMap = std::map<CycleType, Rational, TermOrder>;

    explicit AlgebraElement(int d) : d_(d) {
        if (d < 1) throw std::invalid_argument("ambient degree must be >= 1");
    }

    int degree() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const CycleType& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const CycleType& lambda, const Rational& c) {
        if (c == 0) return;
        if (lambda.support() > d_)
            throw std::invalid_argument("term support exceeds ambient degree");
        auto [it, inserted] = terms_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_homogeneous(std::int64_t j) const {
        for (const auto& [lambda, c] : terms_)
            if (lambda.norm() != j) return false;
        return true;
    }

    AlgebraElement norm_component(std::int64_t j) const {
        AlgebraElement out(d_);
        for (const auto& [lambda, c] : terms_)
            if (lambda.norm() == j) out.add_term(lambda, c);
        return out;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        if (d_ != o.d_) throw std::invalid_argument("ambient degree mismatch");
        for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
        return *this;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        r += o;
        return r;
    }

    AlgebraElement operator*(const Rational& c) const {
        AlgebraElement r(d_);
        if (c != 0)
            for (const auto& [lambda, v] : terms_) r.terms_.emplace(lambda, v * c);
        return r;
    }

    AlgebraElement operator-(const AlgebraElement& o) const { return *this + o * Rational(-1); }

    bool operator==(const AlgebraElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [lambda, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += rational_str(c) + "*g" + lambda.to_string();
        }
        return s;
    }

private:
    int d_;
    TermMap terms_;
};

// g_lambda(d); the zero element when supp(lambda) > d.
inline AlgebraElement basis(const CycleType& lambda, int d) {
    AlgebraElement e(d);
    if (lambda.support() <= d) e.add_term(lambda, 1);
    return e;
}

inline AlgebraElement unit(int d) { return basis(CycleType(), d); }

// gamma_i: the class of a single i-cycle, norm i-1.
inline AlgebraElement gamma(std::int64_t i, int d) {
    if (i < 2 || i > d)
        throw std::invalid_argument("gamma index " + std::to_string(i) + " out of range 2.." +
                                    std::to_string(d));
    return basis(CycleType::single_cycle(i), d);
}

// delta_i: the class of i disjoint transpositions, norm i.
inline AlgebraElement delta(std::int64_t i, int d) {
    if (i < 1 || i > d / 2)
        throw std::invalid_argument("delta index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(d / 2));
    return basis(CycleType::transpositions(i), d);
}

// Bilinear product through the structure constants; for each pair of basis
// terms the target classes are enumerated at the summed norm, which already
// enforces the support bound.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                               ThetaCache& cache = theta_cache()) {
    if (x.degree() != y.degree())
        throw std::invalid_argument("multiply: ambient degrees differ (" +
                                    std::to_string(x.degree()) + " vs " +
                                    std::to_string(y.degree()) + ")");
    const int d = x.degree();
    AlgebraElement out(d);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const Rational c = ca * cb;
            for (const auto& eps : enumerate_classes(a.norm() + b.norm(), d)) {
                const Integer t = cache.theta(eps, a, b);
                if (t != 0) out.add_term(eps, c * Rational(t));
            }
        }
    return out;
}

// The algebra map A(h) -> A(d): keep terms with support <= d, retag.
inline AlgebraElement project(const AlgebraElement& x, int d) {
    if (d > x.degree())
        throw std::invalid_argument("project: target degree exceeds source");
    AlgebraElement out(d);
    for (const auto& [lambda, c] : x.terms())
        if (lambda.support() <= d) out.add_term(lambda, c);
    return out;
}

// Product in the support-graded algebra: binomial coefficient on the merged
// type, zero when the supports do not fit inside d.
struct TildeProduct {
    Integer coefficient;
    CycleType type;  // meaningful only when coefficient != 0
};

inline TildeProduct tilde_multiply(const CycleType& a, const CycleType& b, int d) {
    if (a.support() > d || b.support() > d)
        throw std::invalid_argument("tilde_multiply: support exceeds ambient degree");
    if (a.support() + b.support() > d) return {0, CycleType()};
    Integer coeff = 1;
    const CycleType sum = a.plus(b);
    for (std::int64_t i = 2; i <= sum.max_length(); ++i)
        coeff *= binomial(static_cast<unsigned long>(sum.count(i)),
                          static_cast<unsigned long>(a.count(i)));
    return {coeff, sum};
}

// Value of a monomial in the generators gamma_2..gamma_{m+1}: factors
// multiplied in ascending variable order, left to right.
inline AlgebraElement monomial_expand(const Monomial& mon, int d, ThetaCache& cache = theta_cache()) {
    if (mon.max_variable() > d / 2 && mon.norm() > 0) {
        // variables beyond X_{d/2} have no matching minimal generator
        for (std::int64_t i = d / 2 + 1; i <= mon.max_variable(); ++i)
            if (mon.exponent(i) > 0)
                throw std::invalid_argument("monomial uses generator of norm " + std::to_string(i) +
                                            " beyond floor(d/2) for d = " + std::to_string(d));
    }
    AlgebraElement acc = unit(d);
    for (std::int64_t i = 1; i <= mon.max_variable(); ++i)
        for (std::int64_t e = 0; e < mon.exponent(i); ++e)
            acc = multiply(acc, gamma(i + 1, d), cache);
    return acc;
}

}  // namespace hilb
