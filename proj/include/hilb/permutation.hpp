#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilb/cycle_type.hpp"
#include "hilb/monomial.hpp"
#include "hilb/numeric.hpp"

namespace hilb {

// Ground-truth engine: everything here works by direct enumeration in S_d and
// is independent of the recursion it validates.  Permutations act on
// {0,...,d-1}; composition is right-to-left, (s*t)(x) = s(t(x)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
                throw std::invalid_argument("not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int d) {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& t) const {
        if (degree() != t.degree()) throw std::invalid_argument("degree mismatch");
        std::vector<int> img(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) img[x] = img_[t.img_[x]];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
        return Permutation(std::move(img));
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int x = static_cast<int>(s);
            while (!seen[x]) {
                seen[x] = true;
                cyc.push_back(x);
                x = img_[x];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

// Norm = degree minus number of cycles (fixpoints count as cycles).
inline std::int64_t perm_norm(const Permutation& s) {
    return s.degree() - static_cast<std::int64_t>(s.cycles().size());
}

inline CycleType cycle_type(const Permutation& s) {
    std::vector<std::int64_t> counts;
    for (const auto& c : s.cycles()) {
        if (c.size() < 2) continue;
        if (counts.size() < c.size() - 1) counts.resize(c.size() - 1, 0);
        ++counts[c.size() - 2];
    }
    return CycleType(std::move(counts));
}

inline std::int64_t perm_support(const Permutation& s) {
    std::int64_t n = 0;
    for (int x = 0; x < s.degree(); ++x)
        if (s(x) != x) ++n;
    return n;
}

// Canonical representative of the class: cycles laid out on consecutive
// points, longest cycle first.
inline Permutation class_representative(const CycleType& lambda, int d) {
    if (lambda.support() > d) throw std::invalid_argument("class support exceeds degree");
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    int next = 0;
    for (std::int64_t len = lambda.max_length(); len >= 2; --len)
        for (std::int64_t k = 0; k < lambda.count(len); ++k) {
            for (int j = 0; j < len - 1; ++j) img[next + j] = next + j + 1;
            img[next + static_cast<int>(len) - 1] = next;
            next += static_cast<int>(len);
        }
    return Permutation(std::move(img));
}

// Every member of the conjugacy class, by filtering S_d.  Fine for the
// enumeration degrees this oracle is meant for.
inline std::vector<Permutation> class_members(const CycleType& lambda, int d) {
    if (lambda.support() > d) throw std::invalid_argument("class support exceeds degree");
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<int>(img)};
        if (cycle_type(p) == lambda) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline Integer class_size(const CycleType& lambda, int d) {
    // d! / (prod i^l_i * l_i!), with the fixpoints' (d - supp)! also divided out.
    if (lambda.support() > d) return 0;
    Integer den = factorial(static_cast<unsigned long>(d - lambda.support()));
    for (std::int64_t i = 2; i <= lambda.max_length(); ++i) {
        const std::int64_t c = lambda.count(i);
        if (c == 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(c));
        den *= p * factorial(static_cast<unsigned long>(c));
    }
    return exact_div(factorial(static_cast<unsigned long>(d)), den, "class_size");
}

// Number of factorisations rho = s*t of one fixed permutation rho of type
// epsilon, with s of type alpha and t of type beta.  Zero when the norms are
// not additive.
inline Integer oracle_theta(const CycleType& epsilon, const CycleType& alpha,
                            const CycleType& beta, int d,
                            const Permutation* rho_override = nullptr) {
    if (epsilon.support() > d || alpha.support() > d || beta.support() > d)
        throw std::invalid_argument("oracle_theta: support exceeds degree");
    if (alpha.norm() + beta.norm() != epsilon.norm()) return 0;
    const Permutation rho = rho_override ? *rho_override : class_representative(epsilon, d);
    Integer count = 0;
    for (const auto& s : class_members(alpha, d)) {
        const Permutation t = s.inverse().compose(rho);  // s*t = rho
        if (cycle_type(t) == beta) ++count;
    }
    return count;
}

// Full product g_alpha * g_beta expanded permutation-by-permutation: the
// norm-additive products s*t are collected by class, and the count for a
// class divides exactly by its size to give the basis coefficient.  The
// degree cap guards against the factorial blowup of the double enumeration.
inline std::map<CycleType, Integer> oracle_product(const CycleType& alpha, const CycleType& beta,
                                                   int d, int degree_cap = 8) {
    if (d > degree_cap)
        throw std::invalid_argument("oracle_product: degree " + std::to_string(d) +
                                    " exceeds enumeration cap " + std::to_string(degree_cap));
    if (alpha.support() > d || beta.support() > d)
        throw std::invalid_argument("oracle_product: support exceeds degree");
    std::map<CycleType, Integer> acc;
    const auto as = class_members(alpha, d);
    const auto bs = class_members(beta, d);
    const std::int64_t target = alpha.norm() + beta.norm();
    for (const auto& s : as)
        for (const auto& t : bs) {
            const Permutation st = s.compose(t);
            if (perm_norm(st) == target) ++acc[cycle_type(st)];
        }
    for (auto& [eps, pairs] : acc)
        pairs = exact_div(pairs, class_size(eps, d), "oracle_product coefficient");
    return acc;
}

// Monomial value in the generators computed purely by permutation
// enumeration; the ground-truth counterpart of the recursion-backed
// expansion.
inline std::map<CycleType, Integer> oracle_monomial_expand(const Monomial& mon, int d,
                                                           int degree_cap = 8) {
    std::map<CycleType, Integer> acc{{CycleType(), 1}};
    for (std::int64_t i = 1; i <= mon.max_variable(); ++i)
        for (std::int64_t e = 0; e < mon.exponent(i); ++e) {
            std::map<CycleType, Integer> next;
            for (const auto& [lam, c] : acc)
                for (const auto& [eps, k] :
                     oracle_product(lam, CycleType::single_cycle(i + 1), d, degree_cap))
                    next[eps] += c * k;
            acc = std::move(next);
        }
    return acc;
}

}  // namespace hilb
