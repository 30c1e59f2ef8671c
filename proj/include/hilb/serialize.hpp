#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilb/algebra.hpp"
#include "hilb/identities.hpp"
#include "hilb/presentation.hpp"
#include "hilb/verify.hpp"

namespace hilb {

// All JSON emitted by the CLI goes through ordered_json with fields inserted
// in a fixed order, so identical inputs give byte-identical output.
using json = nlohmann::ordered_json;

inline json element_terms_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [lambda, c] : x.terms()) terms.push_back({lambda.to_string(), rational_str(c)});
    return terms;
}

inline json multiply_report_json(const CycleType& a, const CycleType& b, int d,
                                 const AlgebraElement& product) {
    json out;
    out["schema"] = "hilb.multiply/1";
    out["d"] = d;
    out["factors"] = {a.to_string(), b.to_string()};
    out["product"] = element_terms_json(product);
    return out;
}

inline json theta_report_json(const CycleType& eps, const CycleType& a, const CycleType& b,
                              const Integer& value) {
    json out;
    out["schema"] = "hilb.theta/1";
    out["epsilon"] = eps.to_string();
    out["alpha"] = a.to_string();
    out["beta"] = b.to_string();
    out["theta"] = value.get_str();
    return out;
}

inline json relation_json(const RelationVector& rel, const std::vector<Monomial>& monomials) {
    json monoms = json::array();
    json coeffs = json::array();
    for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
        if (rel.coefficients[i] == 0) continue;
        monoms.push_back(monomials[i].to_string());
        coeffs.push_back(rational_str(rel.coefficients[i]));
    }
    json out;
    out["norm"] = rel.norm;
    out["monomials"] = monoms;
    out["coefficients"] = coeffs;
    return out;
}

inline json presentation_json(const PresentationResult& p) {
    json out;
    out["schema"] = "hilb.presentation/1";
    out["d"] = p.d;
    out["m"] = p.m;
    json gens = json::array();
    for (std::int64_t i = 2; i <= p.m + 1; ++i) gens.push_back("gamma_" + std::to_string(i));
    out["generators"] = gens;
    json rels = json::array();
    for (const auto& [n, vecs] : p.relations) {
        const auto monomials = enumerate_monomials(n, p.m);
        for (const auto& rel : vecs) rels.push_back(relation_json(rel, monomials));
    }
    out["relations"] = rels;
    json counts = json::object();
    for (const auto& [n, r] : p.counts) counts[std::to_string(n)] = r;
    out["counts"] = counts;
    out["total"] = p.total;
    return out;
}

inline json relation_table_json(const std::vector<PresentationResult>& rows) {
    json out;
    out["schema"] = "hilb.relation-table/1";
    json jrows = json::array();
    for (const auto& p : rows) {
        json row;
        row["d"] = p.d;
        json counts = json::object();
        for (const auto& [n, r] : p.counts) counts[std::to_string(n)] = r;
        row["counts"] = counts;
        row["total"] = p.total;
        jrows.push_back(row);
    }
    out["rows"] = jrows;
    return out;
}

inline std::string relation_table_tsv(const std::vector<PresentationResult>& rows) {
    std::int64_t n_max = 1;
    for (const auto& p : rows)
        for (const auto& [n, r] : p.counts) n_max = std::max(n_max, n);
    std::ostringstream out;
    out << "d";
    for (std::int64_t n = 1; n <= n_max; ++n) out << "\t" << n;
    out << "\ttotal\n";
    for (const auto& p : rows) {
        out << p.d;
        for (std::int64_t n = 1; n <= n_max; ++n) out << "\t" << p.count_at(n);
        out << "\t" << p.total << "\n";
    }
    return out.str();
}

inline json verify_report_json(const VerifyReport& report) {
    json out;
    out["schema"] = "hilb.verify/1";
    out["d"] = report.d;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["relation"] = c.text;
        jc["ok"] = c.ok;
        jc["vanishes"] = c.vanishes;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    out["relations"] = checks;
    out["pass"] = report.pass;
    return out;
}

inline json suite_report_json(const SuiteReport& report) {
    json out;
    out["schema"] = "hilb.identities/1";
    out["suite"] = report.suite;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    out["checks"] = checks;
    out["pass"] = report.pass();
    return out;
}

// Human-readable relation polynomial in the display alphabet.
inline std::string relation_pretty(const RelationVector& rel, const std::vector<Monomial>& monomials,
                                   const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
        const Rational& c = rel.coefficients[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        const std::string mono = monomials[i].pretty(names);
        if (mag != 1 || mono == "1") {
            s += rational_str(mag);
            if (mono != "1") s += mono;
        } else {
            s += mono;
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string presentation_text(const PresentationResult& p) {
    std::ostringstream out;
    const auto names = generator_names(p.d);
    out << "A(" << p.d << "): " << p.m << " generator" << (p.m == 1 ? "" : "s");
    for (std::size_t i = 0; i < names.size(); ++i)
        out << (i ? ", " : " (") << names[i] << " = gamma_" << (i + 2);
    if (!names.empty()) out << ")";
    out << ", " << p.total << " minimal relation" << (p.total == 1 ? "" : "s") << "\n";
    std::int64_t max_norm = 0;
    for (const auto& [n, vecs] : p.relations) {
        const auto monomials = enumerate_monomials(n, p.m);
        out << "  norm " << n << " (" << vecs.size() << "):\n";
        for (const auto& rel : vecs) out << "    " << relation_pretty(rel, monomials, names) << "\n";
        max_norm = std::max(max_norm, n);
    }
    if (p.total > 0 && max_norm <= p.d)
        out << "  (observed: all minimal relations lie in norms <= " << p.d << ")\n";
    return out.str();
}

// Array layout per norm: header row of monomials, one row of coefficients
// per relation.
inline std::string presentation_latex(const PresentationResult& p) {
    std::ostringstream out;
    const auto names = generator_names(p.d);
    out << "% minimal presentation of A(" << p.d << ")\n";
    for (const auto& [n, vecs] : p.relations) {
        const auto monomials = enumerate_monomials(n, p.m);
        std::vector<bool> used(monomials.size(), false);
        for (const auto& rel : vecs)
            for (std::size_t i = 0; i < monomials.size(); ++i)
                if (rel.coefficients[i] != 0) used[i] = true;
        out << "% norm " << n << "\n\\begin{matrix}\n";
        bool first = true;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            if (!used[i]) continue;
            if (!first) out << " & ";
            first = false;
            std::string mono = monomials[i].pretty(names);
            for (std::size_t pos = 0; (pos = mono.find('^', pos)) != std::string::npos;) {
                // wrap multi-digit exponents in braces
                std::size_t end = pos + 1;
                while (end < mono.size() && std::isdigit(static_cast<unsigned char>(mono[end]))) ++end;
                mono = mono.substr(0, pos + 1) + "{" + mono.substr(pos + 1, end - pos - 1) + "}" +
                       mono.substr(end);
                pos = end + 2;
            }
            out << mono;
        }
        out << " \\\\\n";
        for (const auto& rel : vecs) {
            first = true;
            for (std::size_t i = 0; i < monomials.size(); ++i) {
                if (!used[i]) continue;
                if (!first) out << " & ";
                first = false;
                out << rational_str(rel.coefficients[i]);
            }
            out << " \\\\\n";
        }
        out << "\\end{matrix}\n";
    }
    return out.str();
}

}  // namespace hilb
