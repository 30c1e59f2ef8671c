#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

// A conjugacy class of a symmetric group, encoded by its cycle type: the
// sequence (l2, l3, ...) counting cycles of each length >= 2.  Stored densely
// from index 2 with trailing zeros trimmed, so structural equality is
// mathematical equality and values can serve as map keys.
//
// norm    = sum (i-1)*l_i   (minimal number of transpositions)
// support = sum  i   *l_i   (number of non-fixed points)
// support - norm = number of nontrivial cycles.
class CycleType {
public:
    CycleType() = default;

    explicit CycleType(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
        for (auto c : counts_)
            if (c < 0) throw std::invalid_argument("negative cycle count");
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
        std::int64_t n = 0, s = 0;
        for (std::size_t idx = 0; idx < counts_.size(); ++idx) {
            const std::int64_t len = static_cast<std::int64_t>(idx) + 2;
            std::int64_t t = 0;
            if (__builtin_mul_overflow(len, counts_[idx], &t) ||
                __builtin_add_overflow(s, t, &s) ||
                __builtin_add_overflow(n, t - counts_[idx], &n))
                throw std::overflow_error("cycle type norm/support overflows 64 bits");
        }
        norm_ = n;
        support_ = s;
    }

    // The single cycle of length `len` (the class of gamma_len).
    static CycleType single_cycle(std::int64_t len) {
        if (len < 2) throw std::invalid_argument("cycle length must be >= 2");
        std::vector<std::int64_t> c(static_cast<std::size_t>(len) - 1, 0);
        c.back() = 1;
        return CycleType(std::move(c));
    }

    // `count` disjoint transpositions (the class of delta_count).
    static CycleType transpositions(std::int64_t count) {
        if (count < 0) throw std::invalid_argument("negative transposition count");
        if (count == 0) return CycleType();
        return CycleType(std::vector<std::int64_t>{count});
    }

    std::int64_t norm() const { return norm_; }
    std::int64_t support() const { return support_; }
    std::int64_t cycle_count() const { return support_ - norm_; }
    bool is_zero() const { return counts_.empty(); }

    // Cycle length if this is a single cycle 1_len, otherwise 0.
    std::int64_t single_cycle_length() const {
        if (cycle_count() != 1) return 0;
        return max_length();
    }

    // Count of cycles of length i (i >= 2).
    std::int64_t count(std::int64_t i) const {
        if (i < 2 || static_cast<std::size_t>(i - 2) >= counts_.size()) return 0;
        return counts_[static_cast<std::size_t>(i - 2)];
    }

    // Largest cycle length present, 0 for the identity class.
    std::int64_t max_length() const {
        return counts_.empty() ? 0 : static_cast<std::int64_t>(counts_.size()) + 1;
    }

    const std::vector<std::int64_t>& counts() const { return counts_; }

    CycleType plus(const CycleType& o) const {
        std::vector<std::int64_t> c(std::max(counts_.size(), o.counts_.size()), 0);
        for (std::size_t i = 0; i < counts_.size(); ++i) c[i] += counts_[i];
        for (std::size_t i = 0; i < o.counts_.size(); ++i) c[i] += o.counts_[i];
        return CycleType(std::move(c));
    }

    // Copy with the count of i-cycles changed by `delta`; throws if negative.
    CycleType with_count_changed(std::int64_t i, std::int64_t delta) const {
        if (i < 2) throw std::invalid_argument("cycle length must be >= 2");
        std::vector<std::int64_t> c = counts_;
        if (c.size() < static_cast<std::size_t>(i - 1)) c.resize(static_cast<std::size_t>(i - 1), 0);
        c[static_cast<std::size_t>(i - 2)] += delta;
        return CycleType(std::move(c));
    }

    bool operator==(const CycleType& o) const = default;
    auto operator<=>(const CycleType& o) const = default;

    // "[l2,l3,...]"; "[]" is the identity class.
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(counts_[i]);
        }
        return s + "]";
    }

    static CycleType parse(const std::string& text) {
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip_ws();
        if (i == text.size() || text[i] != '[')
            throw std::invalid_argument("cycle type must look like [l2,l3,...]: " + text);
        ++i;
        std::vector<std::int64_t> counts;
        skip_ws();
        while (i < text.size() && text[i] != ']') {
            bool neg = false;
            if (text[i] == '-') { neg = true; ++i; }
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("bad cycle type entry in " + text);
            std::int64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (v > (INT64_MAX - 9) / 10) throw std::overflow_error("cycle count overflows");
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            counts.push_back(neg ? -v : v);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i == text.size() || text[i] != ']')
            throw std::invalid_argument("unterminated cycle type: " + text);
        ++i;
        skip_ws();
        if (i != text.size())
            throw std::invalid_argument("trailing characters after cycle type: " + text);
        return CycleType(std::move(counts));
    }

private:
    std::vector<std::int64_t> counts_;
    std::int64_t norm_ = 0;
    std::int64_t support_ = 0;
};

// Ordering used for enumeration and term display: ascending norm, then
// descending lexicographic on the count vectors (so e.g. [2] sorts before
// [0,1] within norm 2).
inline bool desc_lex_less(const CycleType& a, const CycleType& b) {
    const auto& x = a.counts();
    const auto& y = b.counts();
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t xi = i < x.size() ? x[i] : 0;
        const std::int64_t yi = i < y.size() ? y[i] : 0;
        if (xi != yi) return xi > yi;
    }
    return false;
}

struct TermOrder {
    bool operator()(const CycleType& a, const CycleType& b) const {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return desc_lex_less(a, b);
    }
};

// The norm-shift operator on cycle types: moves one i-cycle to an
// (i-1)-cycle; for i = 2 it removes a transposition.  Empty result when
// there is no i-cycle to shift.
inline std::optional<CycleType> delta_op(const CycleType& beta, std::int64_t i) {
    if (i < 2) throw std::invalid_argument("delta_op index must be >= 2");
    if (beta.count(i) == 0) return std::nullopt;
    if (i == 2) return beta.with_count_changed(2, -1);
    return beta.with_count_changed(i, -1).with_count_changed(i - 1, +1);
}

// All cycle types with norm k and support <= d, in TermOrder (descending lex
// within the fixed norm).  Cycle types of norm k correspond to partitions of
// k (part p <-> one (p+1)-cycle); the support bound caps the part count at
// d - k.  Partition generation follows the ascending-composition scheme.
inline std::vector<CycleType> enumerate_classes(std::int64_t k, std::int64_t d) {
    std::vector<CycleType> out;
    if (k < 0 || d < 0) throw std::invalid_argument("enumerate_classes: negative argument");
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    const std::int64_t max_parts = d - k;
    if (max_parts <= 0) return out;

    std::vector<std::int64_t> parts;
    auto emit = [&](const std::vector<std::int64_t>& ps) {
        std::vector<std::int64_t> counts;
        for (auto p : ps) {
            const std::size_t idx = static_cast<std::size_t>(p) - 1;  // cycle length p+1
            if (counts.size() <= idx) counts.resize(idx + 1, 0);
            ++counts[idx];
        }
        out.emplace_back(std::move(counts));
    };
    // Ascending compositions: parts non-decreasing, at most max_parts of them.
    auto rec = [&](auto&& self, std::int64_t rem, std::int64_t min_part, std::int64_t slots) -> void {
        if (rem == 0) {
            emit(parts);
            return;
        }
        if (slots == 0) return;
        for (std::int64_t p = min_part; p <= rem; ++p) {
            parts.push_back(p);
            self(self, rem - p, p, slots - 1);
            parts.pop_back();
        }
    };
    rec(rec, k, 1, max_parts);

    std::sort(out.begin(), out.end(), TermOrder{});
    return out;
}

// Splittings (A, A') with A + A' = alpha componentwise and supp(A) <= nu.
// Duplicate-free by construction (distinct A), ordered by the componentwise
// counter.
inline std::vector<std::pair<CycleType, CycleType>> decompositions(const CycleType& alpha,
                                                                   std::int64_t nu) {
    if (nu < 2) throw std::invalid_argument("decompositions: nu must be >= 2");
    const auto& counts = alpha.counts();
    std::vector<std::int64_t> pick(counts.size(), 0);
    std::vector<std::pair<CycleType, CycleType>> out;
    for (;;) {
        CycleType a{std::vector<std::int64_t>(pick)};
        if (a.support() <= nu) {
            std::vector<std::int64_t> rest(counts.size());
            for (std::size_t i = 0; i < counts.size(); ++i) rest[i] = counts[i] - pick[i];
            out.emplace_back(std::move(a), CycleType(std::move(rest)));
        }
        std::size_t i = 0;
        while (i < pick.size() && pick[i] == counts[i]) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    return out;
}

}  // namespace hilb
