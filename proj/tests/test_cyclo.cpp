#include <random>

#include "cmfields/cyclo.hpp"
#include "cmfields/arith.hpp"
#include "doctest.h"

using cmf::hminus::CycloRational;
using cmf::hminus::cyclotomic_polynomial;

TEST_CASE("cyclotomic polynomials") {
    auto p1 = cyclotomic_polynomial(1);
    CHECK(p1 == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    // first index with a coefficient outside {-1,0,1}
    auto p105 = cyclotomic_polynomial(105);
    CHECK(p105[7] == -2);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (uint64_t n : {4, 5, 8, 12}) {
        auto rnd = [&] {
            CycloRational x(n);
            for (uint64_t e = 0; e < cmf::arith::euler_phi(n); ++e) {
                auto z = CycloRational::zeta_power(n, e);
                z *= mpq_class(static_cast<long>(rng() % 19) - 9,
                               static_cast<long>(rng() % 7) + 1);
                x += z;
            }
            return x;
        };
        for (int t = 0; t < 20; ++t) {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("zeta powers satisfy the cyclotomic relation") {
    for (uint64_t n : {3, 4, 5, 6, 8, 9, 12, 15}) {
        auto z = CycloRational::zeta_power(n, 1);
        CycloRational pow(n, 1);
        for (uint64_t i = 0; i < n; ++i) pow *= z;
        CHECK(pow == CycloRational(n, 1));
    }
}

TEST_CASE("galois-fixed elements are rational") {
    std::mt19937_64 rng(11);
    for (uint64_t n : {5, 8, 12}) {
        CycloRational x(n);
        for (uint64_t e = 0; e < cmf::arith::euler_phi(n); ++e) {
            auto z = CycloRational::zeta_power(n, e);
            z *= mpq_class(static_cast<long>(rng() % 9) - 4);
            x += z;
        }
        CycloRational trace(n);
        for (uint64_t k = 1; k <= n; ++k) {
            if (cmf::arith::gcd(k, n) != 1) continue;
            trace += x.galois_image(k);
        }
        bool fixed = true;
        for (uint64_t k = 1; k <= n; ++k) {
            if (cmf::arith::gcd(k, n) != 1) continue;
            if (!(trace.galois_image(k) == trace)) fixed = false;
        }
        CHECK(fixed);
        CHECK(trace.is_rational());
    }
}
