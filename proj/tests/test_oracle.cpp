#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hilb/permutation.hpp"

using namespace hilb;

namespace {

Permutation random_permutation(std::mt19937& rng, int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("permutation norm is degree minus cycle count", "[oracle]") {
    CHECK(perm_norm(Permutation::identity(5)) == 0);
    CHECK(perm_norm(Permutation({1, 2, 0, 3, 4})) == 2);  // 3-cycle in S_5
    for (int d = 2; d <= 7; ++d) {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[0], img[1]);
        CHECK(perm_norm(Permutation(img)) == 1);
    }
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle types of permutations", "[oracle]") {
    CHECK(cycle_type(Permutation::identity(4)) == CycleType());
    CHECK(cycle_type(Permutation({1, 0, 3, 2})) == CycleType::transpositions(2));
    CHECK(cycle_type(Permutation({1, 2, 0, 4, 3})) ==
          CycleType{std::vector<std::int64_t>{1, 1}});
    CHECK(perm_support(Permutation({1, 2, 0, 4, 3})) == 5);
}

TEST_CASE("class membership counts", "[oracle]") {
    CHECK(class_members(CycleType::transpositions(1), 4).size() == 6);
    CHECK(class_members(CycleType::single_cycle(3), 3).size() == 2);
    CHECK(class_members(CycleType(), 5).size() == 1);
    CHECK_THROWS_AS(class_members(CycleType::single_cycle(5), 4), std::invalid_argument);

    for (int d = 2; d <= 6; ++d)
        for (std::int64_t k = 0; k < d; ++k)
            for (const auto& lam : enumerate_classes(k, d))
                CHECK(Integer(static_cast<long>(class_members(lam, d).size())) ==
                      class_size(lam, d));
}

TEST_CASE("class representative has the requested type", "[oracle]") {
    for (int d = 2; d <= 7; ++d)
        for (std::int64_t k = 0; k < d; ++k)
            for (const auto& lam : enumerate_classes(k, d)) {
                const auto rep = class_representative(lam, d);
                CHECK(cycle_type(rep) == lam);
                CHECK(perm_norm(rep) == lam.norm());
                CHECK(perm_support(rep) == lam.support());
            }
}

TEST_CASE("transposition products change the norm by exactly one", "[oracle]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg(2, 8);
    for (int round = 0; round < 300; ++round) {
        const int d = deg(rng);
        const auto s = random_permutation(rng, d);
        std::uniform_int_distribution<int> pick(0, d - 1);
        int i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        std::vector<int> timg(d);
        std::iota(timg.begin(), timg.end(), 0);
        std::swap(timg[i], timg[j]);
        const Permutation t(timg);
        const auto ts = t.compose(s);
        // same cycle of s: norm drops; different cycles: norm rises
        bool same_cycle = false;
        for (const auto& cyc : s.cycles()) {
            bool has_i = std::find(cyc.begin(), cyc.end(), i) != cyc.end();
            bool has_j = std::find(cyc.begin(), cyc.end(), j) != cyc.end();
            if (has_i && has_j) same_cycle = true;
        }
        CHECK(perm_norm(ts) == perm_norm(s) + (same_cycle ? -1 : 1));
        // and subadditivity for a random pair
        const auto u = random_permutation(rng, d);
        CHECK(perm_norm(s.compose(u)) <= perm_norm(s) + perm_norm(u));
    }
}

TEST_CASE("norm-additive factors have nested cycles", "[oracle]") {
    std::mt19937 rng(7);
    int found = 0;
    while (found < 60) {
        const int d = 6;
        const auto s = random_permutation(rng, d);
        const auto t = random_permutation(rng, d);
        const auto st = s.compose(t);
        if (perm_norm(st) != perm_norm(s) + perm_norm(t)) continue;
        ++found;
        for (const auto& cyc : s.cycles()) {
            if (cyc.size() < 2) continue;
            bool nested = false;
            for (const auto& big : st.cycles())
                if (std::all_of(cyc.begin(), cyc.end(), [&](int x) {
                        return std::find(big.begin(), big.end(), x) != big.end();
                    }))
                    nested = true;
            CHECK(nested);
        }
    }
}

TEST_CASE("oracle theta examples", "[oracle]") {
    CHECK(oracle_theta(CycleType::single_cycle(3), CycleType::transpositions(1),
                       CycleType::transpositions(1), 3) == 3);
    CHECK(oracle_theta(CycleType::transpositions(2), CycleType::transpositions(1),
                       CycleType::transpositions(1), 4) == 2);
    for (std::int64_t k = 1; k <= 3; ++k)
        for (const auto& eps : enumerate_classes(k, 6))
            CHECK(oracle_theta(eps, eps, CycleType(), 6) == 1);
    // norm mismatch short-circuits to zero
    CHECK(oracle_theta(CycleType::single_cycle(4), CycleType::transpositions(1),
                       CycleType::transpositions(1), 6) == 0);
}

TEST_CASE("oracle theta does not depend on the representative", "[oracle]") {
    std::mt19937 rng(123);
    const int d = 6;
    for (std::int64_t n = 1; n <= 4; ++n)
        for (const auto& eps : enumerate_classes(n, d)) {
            const auto members = class_members(eps, d);
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            const Permutation rho2 = members[pick(rng)];
            for (std::int64_t k = 0; k <= n; ++k)
                for (const auto& alpha : enumerate_classes(k, d))
                    for (const auto& beta : enumerate_classes(n - k, d)) {
                        CHECK(oracle_theta(eps, alpha, beta, d) ==
                              oracle_theta(eps, alpha, beta, d, &rho2));
                    }
        }
}

TEST_CASE("oracle product examples", "[oracle]") {
    const auto zero = oracle_product(CycleType::transpositions(1), CycleType::transpositions(1), 2);
    CHECK(zero.empty());

    const auto sq = oracle_product(CycleType::transpositions(1), CycleType::transpositions(1), 4);
    REQUIRE(sq.size() == 2);
    CHECK(sq.at(CycleType::single_cycle(3)) == 3);
    CHECK(sq.at(CycleType::transpositions(2)) == 2);

    const auto by_unit = oracle_product(CycleType(), CycleType::single_cycle(3), 5);
    REQUIRE(by_unit.size() == 1);
    CHECK(by_unit.at(CycleType::single_cycle(3)) == 1);

    CHECK_THROWS_AS(oracle_product(CycleType(), CycleType(), 9), std::invalid_argument);
}

TEST_CASE("oracle product is symmetric", "[oracle]") {
    const int d = 5;
    for (std::int64_t j = 1; j <= 2; ++j)
        for (const auto& a : enumerate_classes(j, d))
            for (std::int64_t k = j; k <= 2; ++k)
                for (const auto& b : enumerate_classes(k, d))
                    CHECK(oracle_product(a, b, d) == oracle_product(b, a, d));
}
