#include <fstream>
#include <random>

#include "cmfields/data_files.hpp"
#include "cmfields/verify.hpp"
#include "doctest.h"

using namespace cmf;
using namespace cmf::verify;

namespace {
IntPoly poly(std::vector<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("poly_discriminant") {
    CHECK(poly_discriminant(poly({41, -1, 1})) == -163);  // x^2 - x + 41
    CHECK(poly_discriminant(poly({1, 0, 1})) == -4);      // x^2 + 1
    CHECK(poly_discriminant(poly({-2, 0, 0, 1})) == -108);
    CHECK(poly_discriminant(poly({1, 1, 1})) == -3);
    CHECK(poly_discriminant(poly({1, 0, -1, 0, 1})) == 144);  // x^4 - x^2 + 1
    // translation invariance on random polynomials
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        int deg = 2 + static_cast<int>(rng() % 7);
        std::vector<mpz_class> c;
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(static_cast<long>(rng() % 21) - 10);
        if (c.back() == 0) c.back() = 1;
        IntPoly p{std::vector<mpz_class>(c)};
        long shift = static_cast<long>(rng() % 7) - 3;
        // p(x + shift) by synthetic substitution
        std::vector<mpz_class> q{c.back()};
        for (int i = deg - 1; i >= 0; --i) {
            // q = q * (x + shift) + c[i]
            std::vector<mpz_class> nq(q.size() + 1, 0);
            for (size_t j = 0; j < q.size(); ++j) {
                nq[j + 1] += q[j];
                nq[j] += q[j] * shift;
            }
            nq[0] += c[static_cast<size_t>(i)];
            q = std::move(nq);
        }
        IntPoly ps{std::move(q)};
        CHECK(poly_discriminant(p) == poly_discriminant(ps));
    }
}

TEST_CASE("sturm_real_roots") {
    CHECK(sturm_real_roots(poly({1, 0, -1, 0, 1})) == 0);  // x^4 - x^2 + 1
    CHECK(sturm_real_roots(poly({-2, 0, 1})) == 2);        // x^2 - 2
    CHECK(sturm_real_roots(poly({-2, 0, 0, 1})) == 1);     // x^3 - 2
    CHECK(sturm_real_roots(poly({0, -1, 0, 1})) == 3);     // x^3 - x
    CHECK(sturm_real_roots(poly({1, 0, 1})) == 0);
    CHECK_THROWS(sturm_real_roots(poly({1, 2, 1})));  // (x+1)^2 not squarefree
    // oracle: count sign changes on a fine grid plus a root bound
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        int deg = 2 + static_cast<int>(rng() % 5);
        std::vector<mpz_class> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 13) - 6);
        if (c.back() == 0) c.back() = 1;
        IntPoly p{std::vector<mpz_class>(c)};
        if (!is_squarefree(p)) continue;
        // Cauchy bound; evaluate at rational points k/4
        long bound = 1;
        for (auto& x : p.coeffs()) {
            mpz_class a = abs(x) / abs(p.leading()) + 1;
            bound = std::max(bound, static_cast<long>(a.get_si()));
        }
        auto eval_sign = [&](long num, long den) {
            mpq_class x(num, den);
            x.canonicalize();
            mpq_class acc = 0;
            for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
            return sgn(acc);
        };
        int changes = 0, prev = 0;
        for (long k = -4 * bound; k <= 4 * bound; ++k) {
            int s = eval_sign(k, 4);
            if (s == 0) {  // exact rational root: count and move off it
                ++changes;
                prev = 0;
                continue;
            }
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
        CHECK(sturm_real_roots(p) == changes);
    }
}

TEST_CASE("irreducibility certification") {
    CHECK(certify_irreducible(poly({41, -1, 1})).irreducible);
    CHECK(certify_irreducible(poly({1, 0, 0, 0, 1})).irreducible);  // x^4 + 1
    CHECK(certify_irreducible(poly({1, 0, 0, 0, 1})).method ==
          IrreducibilityMethod::Zassenhaus);  // every modular pattern splits
    CHECK(certify_irreducible(poly({1, 1, 1, 1, 1})).irreducible);
    CHECK(!certify_irreducible(poly({1, 2, 1})).irreducible);          // (x+1)^2
    CHECK(!certify_irreducible(poly({2, 3, 1})).irreducible);          // (x+1)(x+2)
    CHECK(!certify_irreducible(poly({-1, 0, 0, 0, 0, 0, 1})).irreducible);  // x^6 - 1
    // x^8 - x^4 + 1 (appendix C2^3 row) splits everywhere mod p
    CHECK(certify_irreducible(poly({1, 0, 0, 0, -1, 0, 0, 0, 1})).irreducible);
}

TEST_CASE("parse_table") {
    auto path = data::find_data_file("appendix_fields.tsv");
    auto rows = parse_table(path);
    CHECK(rows.size() == 366);
    CHECK(rows[0].degree == 2);
    CHECK(rows[0].polynomial == poly({1, -1, 1}));
    CHECK(rows[0].claimed_h == 1);
    CHECK(rows[0].disc_magnitude() == 3);
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> counts;
    for (auto& r : rows) counts[{r.group.first, r.group.second}]++;
    CHECK(counts[{4, 1}] == 7);
    CHECK(counts[{4, 2}] == 147);
    CHECK(counts[{48, 15}] == 1);

    // malformed input: coefficient count mismatch
    std::ofstream bad("/tmp/bad_table.tsv");
    bad << "2\t2\t1\t1,-1\t1\t3\n";
    bad.close();
    CHECK_THROWS(parse_table("/tmp/bad_table.tsv"));
    std::ofstream empty("/tmp/empty_table.tsv");
    empty.close();
    CHECK(parse_table("/tmp/empty_table.tsv").empty());
}

TEST_CASE("verify_row on known rows") {
    auto rows = parse_table(data::find_data_file("appendix_fields.tsv"));
    // x^2 - x + 41, h = 1, disc 163
    const TableRow* r163 = nullptr;
    const TableRow* quartic = nullptr;  // x^4 - 4x^2 + 9
    for (auto& r : rows) {
        if (r.degree == 2 && r.disc_magnitude() == 163) r163 = &r;
        if (r.degree == 4 && r.polynomial == poly({9, 0, -4, 0, 1})) quartic = &r;
    }
    REQUIRE(r163);
    auto v = verify_row(*r163);
    CHECK(v.all_passed);
    REQUIRE(quartic);
    CHECK(quartic->claimed_h == 2);
    CHECK(verify_row(*quartic).all_passed);
}

TEST_CASE("degree-2 rows have index one and negative discriminant") {
    auto rows = parse_table(data::find_data_file("appendix_fields.tsv"));
    for (auto& r : rows) {
        if (r.degree != 2) continue;
        auto d = poly_discriminant(r.polynomial);
        CHECK(d < 0);
        CHECK(-d == r.disc_magnitude());
    }
}

TEST_CASE("degree <= 4 rows fully verify") {
    auto rows = parse_table(data::find_data_file("appendix_fields.tsv"));
    std::vector<TableRow> small;
    for (auto& r : rows)
        if (r.degree <= 4) small.push_back(r);
    CHECK(small.size() == 9 + 7 + 147);
    auto verdict = verify_table(small);
    for (auto& rv : verdict.rows) {
        if (!rv.all_passed) {
            for (auto& c : rv.checks)
                if (!c.passed)
                    MESSAGE("line ", rv.row->line, " check ", c.id, ": ", c.note);
        }
        CHECK(rv.all_passed);
    }
}
