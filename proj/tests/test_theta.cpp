#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <thread>

#include "hilb/permutation.hpp"
#include "hilb/theta.hpp"

using namespace hilb;

namespace {

const CycleType kZero;
const CycleType kT1 = CycleType::transpositions(1);
const CycleType kT2 = CycleType::transpositions(2);
CycleType cyc(std::int64_t l) { return CycleType::single_cycle(l); }

// All (epsilon, alpha, beta) with additive norms and supports <= cap.
std::vector<std::array<CycleType, 3>> additive_triples(std::int64_t cap) {
    std::vector<std::array<CycleType, 3>> out;
    for (std::int64_t n = 0; n <= cap - 1; ++n)
        for (const auto& eps : enumerate_classes(n, cap))
            for (std::int64_t k = 0; k <= n; ++k)
                for (const auto& alpha : enumerate_classes(k, cap))
                    for (const auto& beta : enumerate_classes(n - k, cap))
                        out.push_back({eps, alpha, beta});
    return out;
}

}  // namespace

TEST_CASE("theta base cases and guards", "[theta]") {
    ThetaCache cache;
    CHECK(cache.theta(cyc(5), cyc(5), kZero) == 1);
    CHECK(cache.theta(cyc(5), kZero, cyc(5)) == 1);
    CHECK(cache.theta(kZero, kZero, kZero) == 1);
    CHECK(cache.theta(kT2, kT2, kZero) == 1);
    CHECK(cache.theta(cyc(4), kT1, kT1) == 0);  // norms 1+1 != 3
    CHECK(cache.theta(cyc(3), cyc(3), cyc(3)) == 0);
}

TEST_CASE("single-cycle recursion values", "[theta]") {
    ThetaCache cache;
    CHECK(cache.theta_single_cycle(2, kZero, kT1) == 1);
    CHECK(cache.theta_single_cycle(3, kT1, kT1) == 3);
    CHECK(cache.theta_single_cycle(4, kT1, kT2) == 2);
    CHECK(cache.theta(cyc(3), kT1, kT1) == 3);
    CHECK(cache.theta(cyc(4), kT1, cyc(3)) == 4);
}

TEST_CASE("decomposition recursion values", "[theta]") {
    ThetaCache cache;
    CHECK(cache.decompose_recursion(kT2, kT1, kT1) == 2);
    const CycleType eps{std::vector<std::int64_t>{1, 1}};
    CHECK(cache.decompose_recursion(eps, kT1, cyc(3)) == 1);
    CHECK(cache.decompose_recursion(kT2, kT2, kZero) == 1);
    CHECK_THROWS_AS(cache.decompose_recursion(cyc(3), kT1, kT1), std::invalid_argument);
    CHECK_THROWS_AS(cache.decompose_recursion(kZero, kZero, kZero), std::invalid_argument);
}

TEST_CASE("theta equals the brute-force oracle up to support 5", "[theta]") {
    ThetaCache cache;
    for (const auto& [eps, alpha, beta] : additive_triples(5))
        CHECK(cache.theta(eps, alpha, beta) == oracle_theta(eps, alpha, beta, 5));
}

TEST_CASE("theta matches the oracle on sampled support-8 triples", "[theta]") {
    ThetaCache cache;
    std::mt19937 rng(88);
    const auto triples = additive_triples(8);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    for (int round = 0; round < 30; ++round) {
        const auto& [eps, alpha, beta] = triples[pick(rng)];
        REQUIRE(cache.theta(eps, alpha, beta) == oracle_theta(eps, alpha, beta, 8));
    }
}

TEST_CASE("theta is symmetric in its factors", "[theta]") {
    ThetaCache cache;
    for (const auto& [eps, alpha, beta] : additive_triples(6))
        CHECK(cache.theta(eps, alpha, beta) == cache.theta(eps, beta, alpha));
}

TEST_CASE("oracle values are stable in the ambient degree", "[theta]") {
    for (const auto& [eps, alpha, beta] : additive_triples(4))
        CHECK(oracle_theta(eps, alpha, beta, 4) == oracle_theta(eps, alpha, beta, 5));
}

TEST_CASE("nonvanishing criterion for single-cycle targets", "[theta]") {
    // Experimental converse check: norm-additive factors within the support
    // bound should give a positive count.  Reported, not fatal.
    ThetaCache cache;
    int violations = 0;
    for (std::int64_t l = 2; l <= 8; ++l)
        for (std::int64_t k = 0; k <= l - 1; ++k)
            for (const auto& alpha : enumerate_classes(k, l))
                for (const auto& beta : enumerate_classes(l - 1 - k, l))
                    if (cache.theta_single_cycle(l, alpha, beta) <= 0) ++violations;
    if (violations > 0)
        WARN("positivity converse violated " << violations << " times (experimental check)");
}

TEST_CASE("theta cache cold and warm runs agree", "[theta]") {
    ThetaCache cold1, cold2;
    const Integer first = cold1.theta(cyc(6), kT2, cyc(4));
    CHECK(cold1.theta(cyc(6), kT2, cyc(4)) == first);  // warm hit
    CHECK(cold2.theta(cyc(6), kT2, cyc(4)) == first);  // independent cold run
    CHECK(cold1.size() > 0);
}

TEST_CASE("theta cache round-trips through disk", "[theta]") {
    namespace fs = std::filesystem;
    const auto path = fs::temp_directory_path() / "hilb-theta-cache-test.txt";
    ThetaCache a;
    const Integer v1 = a.theta(cyc(7), kT2, cyc(5));
    const Integer v2 = a.theta(CycleType{std::vector<std::int64_t>{1, 0, 1}}, kT1,
                               CycleType{std::vector<std::int64_t>{0, 0, 1}});
    a.save(path.string());
    ThetaCache b;
    b.load(path.string());
    CHECK(b.size() == a.size());
    CHECK(b.theta(cyc(7), kT2, cyc(5)) == v1);
    CHECK(b.theta(CycleType{std::vector<std::int64_t>{1, 0, 1}}, kT1,
                  CycleType{std::vector<std::int64_t>{0, 0, 1}}) == v2);
    fs::remove(path);

    ThetaCache c;
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs("not-a-cache 99\n", f);
    std::fclose(f);
    CHECK_THROWS_AS(c.load(path.string()), std::runtime_error);
    fs::remove(path);
}

TEST_CASE("concurrent theta calls give serial results", "[theta]") {
    ThetaCache serial;
    const auto triples = additive_triples(6);
    std::vector<Integer> expected;
    expected.reserve(triples.size());
    for (const auto& [eps, alpha, beta] : triples) expected.push_back(serial.theta(eps, alpha, beta));

    ThetaCache shared;
    std::vector<std::thread> pool;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < triples.size(); i += 2) {  // overlapping ranges
                const auto& [eps, alpha, beta] = triples[i];
                if (shared.theta(eps, alpha, beta) != expected[i]) ++mismatches[t];
            }
        });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 4; ++t) CHECK(mismatches[t] == 0);
}

TEST_CASE("derivation trace prints the recursion tree", "[theta]") {
    ThetaCache cache;
    std::ostringstream ss;
    const Integer v = cache.theta_traced(cyc(3), kT1, kT1, ss);
    CHECK(v == 3);
    CHECK(ss.str().find("Theta(1_3") != std::string::npos);
    CHECK(ss.str().find("=") != std::string::npos);
}
