#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "hilb/cycle_type.hpp"
#include "hilb/numeric.hpp"

namespace hilb {

// Structure constants theta(epsilon; alpha, beta) of the class algebra: the
// number of norm-additive factorisations of a fixed permutation of type
// epsilon into factors of types alpha and beta.  The value does not depend on
// the ambient degree, so keys are bare cycle-type triples.
//
// Two recursions drive the computation:
//
//  * single-cycle targets 1_l work through the integer quantity
//    Theta(1_l; a, b) = (l-1)! * theta(1_l; a, b), which satisfies
//        (l - supp(a)) * Theta(1_l; a, b)
//            = l * sum_i (i-1) * (d_i b)_{i-1} * Theta(1_{l-1}; a, d_i b)
//    where d_i moves one i-cycle of b to an (i-1)-cycle.  For i = 2 the
//    shifted factor (d_2 b)_1 is read as l - supp(b) + 1.  The degenerate
//    target l = 1 has Theta = 1 when both factors are trivial, else 0.
//
//  * general targets split off the smallest cycle of epsilon, say of length
//    nu, and sum theta(1_nu; A, B) * theta(epsilon - 1_nu; A', B') over all
//    componentwise splittings alpha = A + A', beta = B + B' with
//    supp(A), supp(B) <= nu and N(A) + N(B) = nu - 1.
//
// All divisions are exact by construction and are checked, never rounded.
class ThetaCache {
public:
    Integer theta(const CycleType& epsilon, const CycleType& alpha, const CycleType& beta) {
        if (alpha.norm() + beta.norm() != epsilon.norm()) return 0;
        if (alpha == epsilon && beta.is_zero()) return 1;
        if (beta == epsilon && alpha.is_zero()) return 1;
        if (alpha.support() > epsilon.support() || beta.support() > epsilon.support()) return 0;
        if (const std::int64_t l = epsilon.single_cycle_length(); l >= 2)
            return theta_single_cycle(l, alpha, beta);
        return decompose_recursion(epsilon, alpha, beta);
    }

    // theta(1_l; alpha, beta), recovered from Theta by exact division.
    Integer theta_single_cycle(std::int64_t l, const CycleType& alpha, const CycleType& beta) {
        if (l < 2) throw std::invalid_argument("theta_single_cycle: l must be >= 2");
        return exact_div(theta_cap(l, alpha, beta), factorial(static_cast<unsigned long>(l - 1)),
                         "theta_single_cycle: Theta not divisible by (l-1)!");
    }

    // Reduction of a multi-cycle target to a single cycle plus a smaller
    // target; requires epsilon neither zero nor a single cycle.
    Integer decompose_recursion(const CycleType& epsilon, const CycleType& alpha,
                                const CycleType& beta) {
        if (epsilon.is_zero() || epsilon.single_cycle_length() != 0)
            throw std::invalid_argument("decompose_recursion: target must have >= 2 cycles");
        if (alpha.norm() + beta.norm() != epsilon.norm()) return 0;

        const Key key = make_key(epsilon, alpha, beta);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = general_.find(key); it != general_.end()) return it->second;
        }

        std::int64_t nu = 2;
        while (epsilon.count(nu) == 0) ++nu;
        const CycleType rest = epsilon.with_count_changed(nu, -1);

        TraceScope ts(this, [&] {
            std::ostringstream ss;
            ss << "theta(" << epsilon.to_string() << "; " << alpha.to_string() << ", "
               << beta.to_string() << ") splitting off 1_" << nu;
            return ss.str();
        });

        Integer total = 0;
        const auto alpha_splits = decompositions(alpha, nu);
        const auto beta_splits = decompositions(beta, nu);
        for (const auto& [a, a_rest] : alpha_splits) {
            if (a.norm() > nu - 1) continue;
            for (const auto& [b, b_rest] : beta_splits) {
                if (a.norm() + b.norm() != nu - 1) continue;
                const Integer t1 = theta_single_cycle(nu, a, b);
                if (t1 == 0) continue;
                total += t1 * theta(rest, a_rest, b_rest);
            }
        }

        ts.result(total);
        std::lock_guard<std::mutex> lock(mu_);
        general_.emplace(key, total);
        return total;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        general_.clear();
        single_.clear();
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return general_.size() + single_.size();
    }

    // On-disk snapshot, versioned; load merges and rejects other versions.
    static constexpr const char* kFileHeader = "hilb-theta-cache 1";

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file: " + path);
        std::lock_guard<std::mutex> lock(mu_);
        out << kFileHeader << "\n";
        for (const auto& [k, v] : single_)
            out << "S " << std::get<0>(k) << " " << std::get<1>(k).to_string() << " "
                << std::get<2>(k).to_string() << " " << v.get_str() << "\n";
        for (const auto& [k, v] : general_)
            out << "G " << std::get<0>(k).to_string() << " " << std::get<1>(k).to_string() << " "
                << std::get<2>(k).to_string() << " " << v.get_str() << "\n";
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return;  // a missing cache is just cold
        std::string header;
        std::getline(in, header);
        if (header != kFileHeader)
            throw std::runtime_error("unrecognized cache format in " + path);
        std::string tag, f1, f2, f3, val;
        std::lock_guard<std::mutex> lock(mu_);
        while (in >> tag >> f1 >> f2 >> f3 >> val) {
            if (tag == "S")
                single_.emplace(SingleKey{std::stoll(f1), CycleType::parse(f2), CycleType::parse(f3)},
                                Integer(val));
            else if (tag == "G")
                general_.emplace(Key{CycleType::parse(f1), CycleType::parse(f2), CycleType::parse(f3)},
                                 Integer(val));
            else
                throw std::runtime_error("bad cache line tag '" + tag + "' in " + path);
        }
    }

    // Human-readable recursion trace for one evaluation (debugging aid).
    Integer theta_traced(const CycleType& epsilon, const CycleType& alpha, const CycleType& beta,
                         std::ostream& os) {
        trace_ = &os;
        depth_ = 0;
        const Integer v = theta(epsilon, alpha, beta);
        trace_ = nullptr;
        return v;
    }

private:
    using Key = std::tuple<CycleType, CycleType, CycleType>;
    using SingleKey = std::tuple<std::int64_t, CycleType, CycleType>;

    static Key make_key(const CycleType& e, const CycleType& a, const CycleType& b) {
        // theta is symmetric in (alpha, beta); normalize the pair order.
        if (b < a) return {e, b, a};
        return {e, a, b};
    }

    Integer theta_cap(std::int64_t l, CycleType alpha, CycleType beta) {
        if (l == 1) return (alpha.is_zero() && beta.is_zero()) ? 1 : 0;
        if (alpha.norm() + beta.norm() != l - 1) return 0;
        if (alpha.support() > l || beta.support() > l) return 0;
        if (alpha.support() == static_cast<std::int64_t>(l)) std::swap(alpha, beta);
        // At most one factor can have full support when the norms add up.

        const SingleKey key = beta < alpha ? SingleKey{l, beta, alpha} : SingleKey{l, alpha, beta};
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = single_.find(key); it != single_.end()) return it->second;
        }

        TraceScope ts(this, [&] {
            std::ostringstream ss;
            ss << "Theta(1_" << l << "; " << alpha.to_string() << ", " << beta.to_string() << ")";
            return ss.str();
        });

        Integer rhs = 0;
        for (std::int64_t i = 2; i <= beta.max_length(); ++i) {
            const auto shifted = delta_op(beta, i);
            if (!shifted) continue;
            const Integer weight = (i - 1) * Integer(i == 2 ? l - beta.support() + 1
                                                            : beta.count(i - 1) + 1);
            const Integer sub = theta_cap(l - 1, alpha, *shifted);
            rhs += weight * sub;
        }
        const Integer value =
            exact_div(Integer(l) * rhs, Integer(l - alpha.support()),
                      "single-cycle recursion: left factor does not divide");

        ts.result(value);
        std::lock_guard<std::mutex> lock(mu_);
        single_.emplace(key, value);
        return value;
    }

    struct TraceScope {
        ThetaCache* c;
        TraceScope(ThetaCache* cache, auto describe) : c(cache) {
            if (c->trace_) {
                for (int i = 0; i < c->depth_; ++i) *c->trace_ << "  ";
                *c->trace_ << describe() << "\n";
                ++c->depth_;
            }
        }
        void result(const Integer& v) {
            if (c->trace_) {
                for (int i = 0; i < c->depth_; ++i) *c->trace_ << "  ";
                *c->trace_ << "= " << v.get_str() << "\n";
            }
        }
        ~TraceScope() {
            if (c->trace_) --c->depth_;
        }
    };

    mutable std::mutex mu_;
    std::map<Key, Integer> general_;
    std::map<SingleKey, Integer> single_;
    std::ostream* trace_ = nullptr;
    int depth_ = 0;
};

// Process-wide cache shared by all algebra operations.
inline ThetaCache& theta_cache() {
    static ThetaCache cache;
    return cache;
}

inline Integer theta(const CycleType& epsilon, const CycleType& alpha, const CycleType& beta) {
    return theta_cache().theta(epsilon, alpha, beta);
}

}  // namespace hilb
