#include <set>

#include "cmfields/enumerate.hpp"
#include "doctest.h"

using namespace cmf;
using namespace cmf::enumerate;

TEST_CASE("exact bounds") {
    auto b = ExactBound::parse("163");
    CHECK(b.admits(163));
    CHECK(!b.admits(164));
    CHECK(b.at_boundary(163));
    auto p = ExactBound::parse("10^115/16");
    CHECK(p.str() == "10^115/16");
    // 10^(115/16) = 15399265.26...
    CHECK(p.admits(15399265));
    CHECK(!p.admits(15399266));
    CHECK(p.ceiling() == 15399266);
    auto e = ExactBound::parse("1e28");
    mpz_class t("10000000000000000000000000000");
    CHECK(e.admits(t));
    CHECK(!e.admits(t + 1));
    CHECK(ExactBound::unbounded().admits(t * t));
}

TEST_CASE("conductor_search_bound soundness") {
    // shape [2]: disc = conductor, so the bound must reach B itself
    CHECK(conductor_search_bound({2}, ExactBound::from_integer(163)) >= 163);
    // shape [2,2] with bound 144 must allow conductor 12 (Q(zeta_12))
    CHECK(conductor_search_bound({2, 2}, ExactBound::from_integer(144)) >= 12);
    // shape [4] with bound 125 must allow conductor 5 (Q(zeta_5), disc 5^3)
    CHECK(conductor_search_bound({4}, ExactBound::from_integer(125)) >= 5);
}

TEST_CASE("quadratic completeness against the fundamental-discriminant oracle") {
    // brute-force oracle: all fundamental discriminants |d| <= B
    const std::int64_t B = 4000;
    std::set<std::int64_t> oracle;
    for (std::int64_t d = -B; d <= B; ++d)
        if (d != 1 && d != 0 && hminus::is_fundamental_discriminant(d)) oracle.insert(d);

    EnumerationRequest req;
    req.shape = {2};
    req.disc_bound = ExactBound::from_integer(B);
    auto rep = enumerate_abelian(req);
    CHECK(rep.total_found == oracle.size());
    std::set<std::int64_t> got;
    for (const auto& rec : rep.fields) {
        std::int64_t a = static_cast<std::int64_t>(rec.spec.discriminant_magnitude().get_ui());
        got.insert(rec.spec.totally_real() ? a : -a);
    }
    CHECK(got == oracle);
}

TEST_CASE("imaginary quadratic fields up to 163") {
    EnumerationRequest req;
    req.shape = {2};
    req.disc_bound = ExactBound::from_integer(163);
    req.signature = SignatureFilter::CmOnly;
    auto rep = enumerate_abelian(req);
    // 13 imaginary quadratic fields have |d| <= 163? no: count them
    std::uint64_t h1 = 0;
    for (const auto& rec : rep.fields) {
        REQUIRE(rec.hminus.has_value());
        if (rec.hminus->value == 1) ++h1;
    }
    CHECK(h1 == 9);  // 3, 4, 7, 8, 11, 19, 43, 67, 163
}

TEST_CASE("biquadratic fields with small bound") {
    EnumerationRequest req;
    req.shape = {2, 2};
    req.disc_bound = ExactBound::from_integer(1000);
    auto rep = enumerate_abelian(req);
    // smallest biquadratic disc is 144 (Q(zeta_12))
    REQUIRE(rep.total_found > 0);
    CHECK(rep.fields.front().spec.discriminant_magnitude() == 144);
    for (const auto& rec : rep.fields) {
        CHECK(rec.spec.degree() == 4);
        CHECK(rec.spec.galois_shape() == std::vector<std::uint64_t>{2, 2});
        CHECK(rec.spec.discriminant_magnitude() <= 1000);
        // conductor-discriminant consistency
        mpz_class prod = 1;
        for (const auto& chi : rec.spec.characters()) prod *= chi.conductor();
        CHECK(prod == rec.spec.discriminant_magnitude());
    }
    // no duplicates
    std::set<std::string> keys;
    for (const auto& rec : rep.fields) {
        std::string k;
        for (const auto& chi : rec.spec.characters()) k += chi.key() + "|";
        CHECK(keys.insert(k).second);
    }
}

TEST_CASE("cyclic quartic fields: Q(zeta_5) appears") {
    EnumerationRequest req;
    req.shape = {4};
    req.disc_bound = ExactBound::from_integer(2048);
    auto rep = enumerate_abelian(req);
    bool seen_z5 = false;
    for (const auto& rec : rep.fields) {
        if (rec.spec.conductor() == 5) {
            seen_z5 = true;
            CHECK(rec.spec.discriminant_magnitude() == 125);
            REQUIRE(rec.hminus.has_value());
            CHECK(rec.hminus->value == 1);
        }
        CHECK(rec.spec.galois_shape() == std::vector<std::uint64_t>{4});
    }
    CHECK(seen_z5);
    // the conductor-16 CM field x^4 + 4x^2 + 2 has disc 2^11 = 2048
    bool seen_16 = false;
    for (const auto& rec : rep.fields)
        if (rec.spec.conductor() == 16 && !rec.spec.totally_real()) seen_16 = true;
    CHECK(seen_16);
}

TEST_CASE("monotone in the bound and deterministic across thread counts") {
    EnumerationRequest small, large;
    small.shape = large.shape = {2, 2};
    small.disc_bound = ExactBound::from_integer(2000);
    large.disc_bound = ExactBound::from_integer(4000);
    auto rs = enumerate_abelian(small);
    auto rl = enumerate_abelian(large);
    CHECK(rl.total_found >= rs.total_found);
    for (size_t i = 0; i < rs.fields.size(); ++i)
        CHECK(rs.fields[i].spec == rl.fields[i].spec);

    large.threads = 4;
    auto rp = enumerate_abelian(large);
    REQUIRE(rp.total_found == rl.total_found);
    for (size_t i = 0; i < rl.fields.size(); ++i)
        CHECK(rp.fields[i].spec == rl.fields[i].spec);
}

TEST_CASE("totally real filter and sieve counts") {
    EnumerationRequest req;
    req.shape = {2, 2};
    req.disc_bound = ExactBound::from_integer(40000);
    req.sieve = SieveMode::RelativeClassNumberOne;
    auto rep = enumerate_abelian(req);
    CHECK(rep.total_found == rep.useful_count + rep.pruned_count);
    std::uint64_t real_count = 0;
    for (const auto& rec : rep.fields) {
        if (rec.spec.totally_real()) {
            ++real_count;
            CHECK(!rec.verdict.prune);  // totally real fields are never pruned
        }
    }
    CHECK(rep.cm_count + real_count == rep.total_found);

    EnumerationRequest tre = req;
    tre.signature = SignatureFilter::TotallyReal;
    auto rt = enumerate_abelian(tre);
    CHECK(rt.total_found == real_count);
}

TEST_CASE("conductor-capped enumeration") {
    EnumerationRequest req;
    req.shape = {2};
    req.max_conductor = 100;
    auto rep = enumerate_abelian(req);
    for (const auto& rec : rep.fields) CHECK(rec.spec.conductor() <= 100);
    // all fundamental discriminants with |d| <= 100
    std::uint64_t cnt = 0;
    for (std::int64_t d = -100; d <= 100; ++d)
        if (d != 0 && d != 1 && hminus::is_fundamental_discriminant(d)) ++cnt;
    CHECK(rep.total_found == cnt);
}

TEST_CASE("resource refusal") {
    EnumerationRequest req;
    req.shape = {2};
    req.disc_bound = ExactBound::parse("10^115");
    CHECK_THROWS_AS(enumerate_abelian(req), ResourceError);
    EnumerationRequest odd;
    odd.shape = {3};
    odd.disc_bound = ExactBound::from_integer(100);
    CHECK_THROWS_AS(enumerate_abelian(odd), std::invalid_argument);
    odd.signature = SignatureFilter::TotallyReal;
    auto rep = enumerate_abelian(odd);  // C3 fields: disc = f^2, f <= 10
    CHECK(rep.total_found == 2);        // conductors 7 and 9
}
