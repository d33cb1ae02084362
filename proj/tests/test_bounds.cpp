#include "cmfields/bounds.hpp"
#include "doctest.h"

using namespace cmf::bounds;

TEST_CASE("bound_for") {
    const auto& t = table();
    CHECK(t.bound_for(16).alpha_hundredths == 32470);
    CHECK(t.bound_for(16).bound_text == "10^41");
    CHECK(t.bound_for(64).alpha_hundredths == 6190);
    CHECK(t.bound_for(64).bound_text == "10^115");
    CHECK(t.bound_for(96).alpha_hundredths == 5071);
    CHECK(t.bound_for(96).bound_text == "10^164");
    CHECK_THROWS_AS(t.bound_for(20), std::out_of_range);  // never interpolate
}

TEST_CASE("admissible_disc") {
    const auto& t = table();
    // Table 4's minimal degree-64 discriminant 2^286 3^56 is admissible
    mpz_class d64;
    mpz_ui_pow_ui(d64.get_mpz_t(), 2, 286);
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, 56);
    d64 *= p3;
    CHECK(t.admissible_disc(64, d64));
    // 10^42 exceeds the degree-16 bound
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 42);
    CHECK(!t.admissible_disc(16, big));
    // alpha^16 = 1.50...e40 binds before the power-of-ten bound does
    mpz_class ok;
    mpz_ui_pow_ui(ok.get_mpz_t(), 10, 40);
    CHECK(t.admissible_disc(16, ok));
    // degree 10: boundary case 1163^10 is admissible under <=
    mpz_class b10;
    mpz_ui_pow_ui(b10.get_mpz_t(), 1163, 10);
    CHECK(t.admissible_disc(10, b10));
    CHECK(!t.admissible_disc(10, b10 + 1));
}

TEST_CASE("monotone in the discriminant") {
    const auto& t = table();
    mpz_class v = 1;
    bool prev = true;
    for (int i = 0; i < 200; ++i) {
        v *= 7;
        bool cur = t.admissible_disc(32, v);
        if (!prev) CHECK(!cur);
        prev = cur;
    }
}
