#include <map>
#include <set>

#include "cmfields/characters.hpp"
#include "doctest.h"

using namespace cmf;
using chars::DirichletCharacter;

TEST_CASE("all_characters: counts and small tables") {
    auto c1 = chars::all_characters(1);
    CHECK(c1.size() == 1);
    CHECK(c1[0].is_trivial());

    auto c4 = chars::all_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_trivial());
    CHECK(c4[1].order() == 2);
    CHECK(c4[1].is_odd());
    CHECK(c4[1].conductor() == 4);

    // f = 5: orders {1,4,2,4}; the order-2 character even, order-4 ones odd
    auto c5 = chars::all_characters(5);
    REQUIRE(c5.size() == 4);
    std::map<uint64_t, int> order_count;
    for (const auto& chi : c5) {
        order_count[chi.order()]++;
        if (chi.order() == 2) CHECK(!chi.is_odd());
        if (chi.order() == 4) CHECK(chi.is_odd());
    }
    CHECK(order_count[1] == 1);
    CHECK(order_count[2] == 1);
    CHECK(order_count[4] == 2);
}

TEST_CASE("conductor: induced characters reduce") {
    // trivial character mod 12 -> conductor 1
    for (const auto& chi : chars::all_characters(12))
        if (chi.order() == 1) CHECK(chi.conductor() == 1);
    // chi_{-4} lifted mod 12 appears among the mod-12 characters with conductor 4
    int seen4 = 0, seen8 = 0;
    for (const auto& chi : chars::all_characters(12))
        if (chi.conductor() == 4) ++seen4;
    CHECK(seen4 == 1);
    // quadratic character mod 8 with chi(7) = -1, chi(5) = 1 has conductor 8
    for (const auto& chi : chars::all_characters(8)) {
        if (chi.order() != 2) continue;
        auto v7 = chi.value_exponent(7), v5 = chi.value_exponent(5);
        if (*v7 == 1 && *v5 == 0) {
            CHECK(chi.conductor() == 4);  // this one is chi_{-4} induced
        }
        if (*v7 == 1 && *v5 == 1) {
            CHECK(chi.conductor() == 8);
            ++seen8;
        }
    }
    CHECK(seen8 == 1);
}

TEST_CASE("quadratic characters from fundamental discriminants") {
    auto m4 = DirichletCharacter::quadratic(-4);
    CHECK(m4.conductor() == 4);
    CHECK(m4.is_odd());
    auto m3 = DirichletCharacter::quadratic(-3);
    CHECK(m3.conductor() == 3);
    CHECK(m3.is_odd());
    auto p8 = DirichletCharacter::quadratic(8);
    CHECK(p8.conductor() == 8);
    CHECK(!p8.is_odd());
    // chi_8(7) = 1, chi_8(3) = -1
    CHECK(*p8.value_exponent(7) == 0);
    CHECK(*p8.value_exponent(3) == 1);
    CHECK_THROWS_AS(DirichletCharacter::quadratic(-6), std::invalid_argument);
    CHECK_THROWS_AS(DirichletCharacter::quadratic(12 * 4), std::invalid_argument);
}

TEST_CASE("exponent map is a homomorphism (all moduli <= 120)") {
    for (uint64_t f = 1; f <= 120; ++f) {
        for (const auto& chi : chars::all_characters(f)) {
            uint64_t m = chi.order(), c = chi.conductor();
            for (uint64_t a = 1; a <= c; ++a) {
                auto va = chi.value_exponent(a);
                if (!va) continue;
                for (uint64_t b = 1; b <= c; ++b) {
                    auto vb = chi.value_exponent(b);
                    if (!vb) continue;
                    auto vab = chi.value_exponent(a * b % std::max<uint64_t>(c, 1));
                    CHECK(*vab == (*va + *vb) % m);
                }
            }
        }
    }
}

TEST_CASE("characters separate units (f <= 100)") {
    for (uint64_t f = 3; f <= 100; ++f) {
        auto cs = chars::all_characters(f);
        for (uint64_t a = 1; a < f; ++a) {
            if (arith::gcd(a, f) != 1 || a == 1) continue;
            bool separated = false;
            for (const auto& chi : cs) {
                auto v = chi.conductor() == 1
                             ? std::optional<uint64_t>(0)
                             : chi.value_exponent(a % std::max<uint64_t>(chi.conductor(), 1));
                if (v && *v != 0) { separated = true; break; }
            }
            CHECK(separated);
        }
    }
}

TEST_CASE("parity is multiplicative, conductor of powers divides") {
    for (uint64_t f : {15, 16, 21, 40, 45}) {
        auto cs = chars::all_characters(f);
        for (const auto& a : cs)
            for (const auto& b : cs) {
                auto ab = a * b;
                CHECK(ab.is_odd() == (a.is_odd() ^ b.is_odd()));
            }
        for (const auto& a : cs)
            for (uint64_t k = 1; k <= a.order(); ++k) {
                auto p = a.power(k);
                CHECK(a.conductor() % p.conductor() == 0);
                if (arith::gcd(k, a.order()) == 1) CHECK(p.conductor() == a.conductor());
            }
    }
}

TEST_CASE("galois orbits") {
    // character group of Q(i): orbits {1}, {chi_-4}
    auto c4 = chars::all_characters(4);
    auto orbits = chars::galois_orbits(c4);
    CHECK(orbits.size() == 2);

    // character group of Q(zeta_5): orbit sizes 1, 1, 2
    auto c5 = chars::all_characters(5);
    auto o5 = chars::galois_orbits(c5);
    std::multiset<size_t> sizes;
    for (auto& o : o5) sizes.insert(o.size());
    CHECK(sizes == std::multiset<size_t>{1, 1, 2});

    // singleton
    std::vector<DirichletCharacter> triv{DirichletCharacter::trivial()};
    CHECK(chars::galois_orbits(triv).size() == 1);

    // non-closed input must throw
    std::vector<DirichletCharacter> bad{DirichletCharacter::quadratic(-4)};
    CHECK_THROWS_AS(chars::galois_orbits(bad), std::invalid_argument);
}
