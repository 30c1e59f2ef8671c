#pragma once

#include <string>
#include <vector>

#include "hilb/algebra.hpp"
#include "hilb/permutation.hpp"
#include "hilb/poly_text.hpp"
#include "hilb/reference_data.hpp"

namespace hilb {

struct RelationCheck {
    std::string text;
    bool parsed = false;
    bool vanishes = false;
    bool ok = false;       // ambiguous lines: exactly one reading vanishes
    std::string detail;    // residue or parse error; which reading survived
};

struct VerifyReport {
    int d = 0;
    std::vector<RelationCheck> checks;
    bool pass = true;
};

struct VerifyOptions {
    bool use_oracle = false;  // evaluate by permutation enumeration instead of the recursion
    int oracle_cap = 8;
};

namespace detail {
inline AlgebraElement evaluate_polynomial(const std::string& text,
                                          const std::vector<std::string>& names, int d,
                                          ThetaCache& cache, const VerifyOptions& opt) {
    AlgebraElement acc = unit(d) * Rational(0);
    for (const auto& [mon, c] : parse_polynomial(text, names)) {
        if (opt.use_oracle) {
            for (const auto& [lam, k] : oracle_monomial_expand(mon, d, opt.oracle_cap))
                acc.add_term(lam, Rational(c * k));
        } else {
            acc += monomial_expand(mon, d, cache) * Rational(c);
        }
    }
    return acc;
}
}  // namespace detail

// Checks that each relation polynomial evaluates to exactly zero in A(d)
// under gamma substitution.  A relation carrying two printed readings passes
// when exactly one of them vanishes; the report says which.
inline VerifyReport verify_presentation(int d, const std::vector<reference::Relation>& relations,
                                        ThetaCache& cache = theta_cache(),
                                        const VerifyOptions& options = {}) {
    VerifyReport report;
    report.d = d;
    const auto names = generator_names(d);
    for (const auto& rel : relations) {
        RelationCheck check;
        check.text = rel.text;
        try {
            if (!rel.ambiguous()) {
                const AlgebraElement v = detail::evaluate_polynomial(rel.text, names, d, cache, options);
                check.parsed = true;
                check.vanishes = v.is_zero();
                check.ok = check.vanishes;
                if (!check.vanishes) {
                    check.detail = "residue: " + v.to_string();
                    if (!rel.corrected.empty()) {
                        const AlgebraElement fixed =
                            detail::evaluate_polynomial(rel.corrected, names, d, cache, options);
                        check.detail += "; corrected reading " + rel.corrected +
                                        (fixed.is_zero() ? " vanishes" : " does NOT vanish either");
                    }
                }
            } else {
                const AlgebraElement v1 = detail::evaluate_polynomial(rel.text, names, d, cache, options);
                const AlgebraElement v2 = detail::evaluate_polynomial(rel.alternate, names, d, cache, options);
                check.parsed = true;
                check.vanishes = v1.is_zero() || v2.is_zero();
                check.ok = v1.is_zero() != v2.is_zero();
                if (v1.is_zero() && !v2.is_zero())
                    check.detail = "vanishing reading: " + rel.text;
                else if (!v1.is_zero() && v2.is_zero())
                    check.detail = "vanishing reading: " + rel.alternate;
                else if (v1.is_zero() && v2.is_zero())
                    check.detail = "both readings vanish";
                else
                    check.detail = "neither reading vanishes; residues " + v1.to_string() +
                                   " and " + v2.to_string();
            }
        } catch (const std::exception& e) {
            check.parsed = false;
            check.ok = false;
            check.detail = std::string("parse error: ") + e.what();
        }
        report.pass = report.pass && check.ok;
        report.checks.push_back(std::move(check));
    }
    return report;
}

inline VerifyReport verify_reference_presentation(int d, ThetaCache& cache = theta_cache(),
                                                  const VerifyOptions& options = {}) {
    return verify_presentation(d, reference::relations(d), cache, options);
}

// Convenience for caller-supplied relation polynomials.
inline VerifyReport verify_relation_texts(int d, const std::vector<std::string>& texts,
                                          ThetaCache& cache = theta_cache(),
                                          const VerifyOptions& options = {}) {
    std::vector<reference::Relation> rels;
    for (const auto& t : texts) rels.push_back({t, "", ""});
    return verify_presentation(d, rels, cache, options);
}

}  // namespace hilb
