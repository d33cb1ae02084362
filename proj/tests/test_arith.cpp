#include <cstdint>
#include <random>

#include "cmfields/arith.hpp"
#include "doctest.h"

using namespace cmf::arith;

namespace {
// trial-division oracle, independent of the library path
std::vector<std::pair<uint64_t, int>> trial_factor(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}
}  // namespace

TEST_CASE("factor: fixed values") {
    CHECK(factor(1).factors.empty());
    CHECK(factor(65689).factors == trial_factor(65689));
    CHECK(factor(65689).factors ==
          std::vector<std::pair<uint64_t, int>>{{13, 1}, {31, 1}, {163, 1}});
    CHECK(factor(144).factors ==
          std::vector<std::pair<uint64_t, int>>{{2, 4}, {3, 2}});
}

TEST_CASE("factor: random roundtrip against oracle") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
        uint64_t n = rng() % 1'000'000'000 + 1;
        auto f = factor(n);
        CHECK(f.value() == n);
        CHECK(f.factors == trial_factor(n));
        for (auto [p, e] : f.factors) CHECK(is_prime(p));
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(65689) == 12ULL * 30ULL * 162ULL);
    for (uint64_t f = 1; f <= 2000; ++f) {
        uint64_t cnt = 0;
        for (uint64_t a = 1; a <= f; ++a)
            if (gcd(a, f) == 1) ++cnt;
        CHECK(euler_phi(f) == cnt);
    }
}

TEST_CASE("crt_lift") {
    uint64_t r1[] = {1, 2}, m1[] = {3, 5};
    CHECK(crt_lift(r1, m1) == 7);
    uint64_t r2[] = {1, 2}, m2[] = {4, 6};
    CHECK_THROWS_AS(crt_lift(r2, m2), std::invalid_argument);
}

TEST_CASE("unit_group: canonical generators") {
    auto u5 = unit_group(5);
    CHECK(u5.generators == std::vector<uint64_t>{2});
    CHECK(u5.orders == std::vector<uint64_t>{4});
    auto u8 = unit_group(8);
    CHECK(u8.generators == std::vector<uint64_t>{7, 5});
    CHECK(u8.orders == std::vector<uint64_t>{2, 2});
    auto u1 = unit_group(1);
    CHECK(u1.generators.empty());
    CHECK(u1.orders.empty());
}

TEST_CASE("unit_group: exponent vectors biject onto units for f <= 2000") {
    for (uint64_t f = 1; f <= 2000; ++f) {
        auto u = unit_group(f);
        uint64_t prod = 1;
        for (auto o : u.orders) prod *= o;
        CHECK(prod == euler_phi(f));
        for (size_t i = 0; i < u.generators.size(); ++i) {
            CHECK(gcd(u.generators[i], f) == 1);
            CHECK(multiplicative_order(u.generators[i], f) == u.orders[i]);
        }
        if (f > 600) continue;  // exhaustive bijection on the smaller range
        std::vector<bool> seen(f, false);
        std::vector<uint64_t> exps(u.generators.size(), 0);
        uint64_t count = 0;
        while (true) {
            uint64_t x = 1 % f;
            for (size_t i = 0; i < exps.size(); ++i)
                x = mul_mod(x, pow_mod(u.generators[i], exps[i], f), f);
            CHECK(!seen[x]);
            seen[x] = true;
            ++count;
            size_t i = 0;
            for (; i < exps.size(); ++i) {
                if (++exps[i] < u.orders[i]) break;
                exps[i] = 0;
            }
            if (i == exps.size()) break;
        }
        CHECK(count == euler_phi(f));
    }
}

TEST_CASE("is_prime matches trial division on a range") {
    for (uint64_t n = 2; n < 20000; ++n)
        CHECK(is_prime(n) == (trial_factor(n).size() == 1 && trial_factor(n)[0].second == 1));
}
