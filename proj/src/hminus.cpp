#include "cmfields/hminus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace cmf::hminus {

using arith::gcd;
using arith::mul_mod;
using arith::uint64_t;

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return d == 1;
    auto squarefree = [](uint64_t n) {
        for (auto [p, e] : arith::factor(n).factors)
            if (e > 1) return false;
        return true;
    };
    std::int64_t r = ((d % 4) + 4) % 4;
    uint64_t a = static_cast<uint64_t>(d < 0 ? -d : d);
    if (r == 1) return squarefree(a);
    if (r != 0) return false;
    std::int64_t m = d / 4;
    std::int64_t mr = ((m % 4) + 4) % 4;
    if (mr != 2 && mr != 3) return false;
    return squarefree(static_cast<uint64_t>(m < 0 ? -m : m));
}

CycloRational bernoulli_b1(const DirichletCharacter& chi) {
    if (chi.is_trivial() || !chi.is_odd())
        throw std::invalid_argument("bernoulli_b1: character must be odd and nontrivial");
    const uint64_t f = chi.conductor();
    const uint64_t m = chi.order();
    const auto ug = arith::unit_group(f);
    const size_t k = ug.generators.size();

    // exponent step of chi at each generator, relative to zeta_m
    std::vector<uint64_t> step(k);
    for (size_t i = 0; i < k; ++i) {
        uint64_t v = *chi.value_exponent(ug.generators[i] % f);
        step[i] = v % m;
    }

    // walk all units multiplicatively with an odometer over the generator
    // exponents; S[e] accumulates the sum of residues with chi-exponent e
    std::vector<uint64_t> sums(m, 0);
    std::vector<uint64_t> digits(k, 0);
    uint64_t a = 1, v = 0;
    while (true) {
        sums[v] += a;
        size_t i = 0;
        for (; i < k; ++i) {
            a = mul_mod(a, ug.generators[i], f);
            v += step[i];
            if (v >= m) v -= m;
            if (++digits[i] < ug.orders[i]) break;
            digits[i] = 0;  // wrap costs one extra multiply: g^order = 1
        }
        if (i == k) break;
    }
    CycloRational b1(m);
    for (uint64_t e = 0; e < m; ++e) {
        if (sums[e] == 0) continue;
        auto z = CycloRational::zeta_power(m, e);
        z *= mpq_class(sums[e]);
        b1 += z;
    }
    b1 *= mpq_class(1, static_cast<unsigned long>(f));
    return b1;
}

mpq_class orbit_norm_product(std::span<const DirichletCharacter> orbit) {
    if (orbit.empty()) throw std::invalid_argument("orbit_norm_product: empty orbit");
    const auto& chi = orbit.front();
    uint64_t m = chi.order();
    for (const auto& c : orbit)
        if (!c.is_odd()) throw std::invalid_argument("orbit_norm_product: even character");
    if (orbit.size() != arith::euler_phi(m))
        throw std::invalid_argument("orbit_norm_product: incomplete Galois orbit");

    auto b1 = bernoulli_b1(chi);
    CycloRational x = b1;
    x *= mpq_class(-1, 2);  // -B1/2
    CycloRational prod(m, 1);
    for (uint64_t kk = 1; kk <= m; ++kk) {
        if (gcd(kk, m) != 1) continue;
        prod *= x.galois_image(kk);
    }
    if (!prod.is_rational())
        throw std::logic_error("orbit_norm_product: non-rational result");
    return prod.rational_value();
}

namespace {

// partition a conjugation-stable character set into Galois orbits
std::vector<std::vector<DirichletCharacter>> orbit_partition(
    std::vector<DirichletCharacter> set) {
    std::sort(set.begin(), set.end());
    std::vector<char> used(set.size(), 0);
    std::vector<std::vector<DirichletCharacter>> orbits;
    for (size_t i = 0; i < set.size(); ++i) {
        if (used[i]) continue;
        std::vector<DirichletCharacter> orbit;
        uint64_t m = set[i].order();
        for (uint64_t k = 1; k <= m; ++k) {
            if (gcd(k, m) != 1) continue;
            auto c = set[i].power(k);
            auto it = std::lower_bound(set.begin(), set.end(), c);
            if (it == set.end() || *it != c)
                throw std::logic_error("orbit_partition: set not conjugation-stable");
            size_t idx = static_cast<size_t>(it - set.begin());
            if (!used[idx]) {
                used[idx] = 1;
                orbit.push_back(c);
            }
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// product over Galois orbits of the odd characters of prod(-B1/2); rational
mpq_class odd_orbit_product(const CMStructure& cm) {
    std::vector<DirichletCharacter> odd;
    for (const auto& chi : cm.field.characters())
        if (chi.is_odd()) odd.push_back(chi);
    mpq_class p = 1;
    for (auto& orbit : orbit_partition(std::move(odd))) p *= orbit_norm_product(orbit);
    return p;
}

bool rational_square(const mpq_class& q) {
    if (q < 0) return false;
    mpq_class c = q;
    c.canonicalize();
    return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(c.get_den().get_mpz_t());
}

// Is c*eps a square in Q(sqrt(m))?  eps = u + v*sqrt(m) with N(eps) = +1.
bool unit_times_c_is_square(const mpq_class& u, std::int64_t m, uint64_t c) {
    mpq_class half_c(c, 2);
    mpq_class x2 = half_c * (u + 1);
    mpq_class y2 = half_c * (u - 1) / m;
    if (rational_square(x2) && rational_square(y2)) return true;
    x2 = half_c * (u - 1);
    y2 = half_c * (u + 1) / m;
    return rational_square(x2) && rational_square(y2);
}

// Kuroda-style Hasse index for imaginary biquadratic fields.
QIndex biquadratic_q(const CMStructure& cm) {
    std::int64_t d3 = 0, d1 = 0;
    for (const auto& chi : cm.field.characters()) {
        if (chi.is_trivial()) continue;
        if (chi.is_odd()) {
            if (d1 == 0) d1 = -static_cast<std::int64_t>(chi.conductor());
        } else {
            d3 = static_cast<std::int64_t>(chi.conductor());
        }
    }
    const auto& eps = fundamental_unit(d3);
    if (eps.norm == -1) return QIndex::One;
    uint64_t c;
    if (cm.w == 4)
        c = 2;
    else if (cm.w == 6)
        c = 3;
    else
        c = static_cast<uint64_t>(-d1);
    // express eps in terms of sqrt(m), m the squarefree kernel of d3
    std::int64_t m = d3 % 4 == 0 ? d3 / 4 : d3;
    mpq_class u(eps.x, 2);
    u.canonicalize();
    return unit_times_c_is_square(u, m, c) ? QIndex::Two : QIndex::One;
}

// With w = 2, Q = 2 forces K = K+(sqrt(-eps)) for a totally positive unit
// eps, so K/K+ is unramified at every odd prime.  Ramification at an odd p
// shows up in the conductors: sum of v_p over the odd characters exceeding
// the sum over the even ones.
bool odd_prime_ramifies_in_cm_step(const CMStructure& cm) {
    std::map<uint64_t, std::int64_t> balance;  // odd minus even v_p
    for (const auto& chi : cm.field.characters()) {
        for (auto [p, e] : arith::factor(chi.conductor()).factors) {
            if (p == 2) continue;
            balance[p] += chi.is_odd() ? e : -e;
        }
    }
    for (auto [p, b] : balance)
        if (b > 0) return true;
    return false;
}

QIndex structural_q(const CMStructure& cm, const mpq_class& q1_candidate) {
    const auto& F = cm.field;
    if (F.degree() == 2) return QIndex::One;
    auto fac = arith::factor(F.conductor());
    if (fac.factors.size() == 1) return QIndex::One;  // prime power conductor
    if (F.degree() == arith::euler_phi(F.conductor()))
        return QIndex::Two;  // full cyclotomic field, composite conductor
    if (F.degree() == 4) {
        if (F.galois_shape() == std::vector<uint64_t>{4}) {
            // cyclic quartic: N(z) = m * square forces zeta*eps non-square
            return QIndex::One;
        }
        return biquadratic_q(cm);
    }
    if (q1_candidate.get_den() != 1) return QIndex::Two;
    if (cm.w == 2 && odd_prime_ramifies_in_cm_step(cm)) return QIndex::One;
    return QIndex::Ambiguous;
}

bool in_124(const mpq_class& v) { return v == 1 || v == 2 || v == 4; }

}  // namespace

QIndex hasse_unit_index(const CMStructure& cm) {
    if (cm.field.totally_real())
        throw std::invalid_argument("hasse_unit_index: field is not CM");
    mpq_class candidate = odd_orbit_product(cm) * cm.w;
    return structural_q(cm, candidate);
}

HMinusResult relative_class_number(const CMStructure& cm) {
    if (cm.field.totally_real())
        throw std::invalid_argument("relative_class_number: field is not CM");
    HMinusResult r;
    r.w = cm.w;
    mpq_class v1 = odd_orbit_product(cm) * cm.w;  // Q = 1 candidate
    r.q_index = structural_q(cm, v1);
    switch (r.q_index) {
        case QIndex::One:
            r.value = v1;
            break;
        case QIndex::Two:
            r.value = v1 * 2;
            break;
        case QIndex::Ambiguous:
            r.value = v1;
            break;
    }
    r.is_integer = r.q_index != QIndex::Ambiguous && r.value.get_den() == 1;
    if (r.q_index != QIndex::Ambiguous && !r.is_integer)
        throw std::logic_error("relative_class_number: resolved value not integral");
    if (r.q_index == QIndex::Ambiguous) {
        bool a = in_124(v1), b = in_124(v1 * 2);
        r.in_sieve_set = a == b ? (a ? SieveSet::Yes : SieveSet::No) : SieveSet::Ambiguous;
    } else {
        r.in_sieve_set = in_124(r.value) ? SieveSet::Yes : SieveSet::No;
    }
    return r;
}

std::uint64_t imaginary_quadratic_h(std::int64_t d) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("imaginary_quadratic_h: d not a negative fundamental discriminant");
    static std::mutex mu;
    static std::map<std::int64_t, uint64_t> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    uint64_t absd = static_cast<uint64_t>(-d);
    uint64_t h = 0;
    for (uint64_t b = absd & 1; b * b * 3 <= absd; b += 2) {
        uint64_t m4 = (b * b + absd) / 4;
        for (uint64_t a = std::max<uint64_t>(b, 1); a * a <= m4; ++a) {
            if (m4 % a) continue;
            // form (a, +-b, c), c = m4/a >= a >= b
            if (b == 0 || b == a || a * a == m4)
                h += 1;
            else
                h += 2;
        }
    }
    std::scoped_lock lock(mu);
    cache.emplace(d, h);
    return h;
}

const FundamentalUnit& fundamental_unit(std::int64_t d) {
    if (d <= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("fundamental_unit: d not a positive fundamental discriminant");
    static std::mutex mu;
    static std::map<std::int64_t, FundamentalUnit> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // continued fraction of the reduced irrational (P0 + sqrt(d))/2
    uint64_t D = static_cast<uint64_t>(d);
    uint64_t s = static_cast<uint64_t>(std::sqrt(static_cast<double>(D)));
    while (s * s > D) --s;
    while ((s + 1) * (s + 1) <= D) ++s;
    uint64_t P0 = (s % 2 == D % 2) ? s : s - 1;
    uint64_t Q0 = 2;
    uint64_t P = P0, Q = Q0;
    mpz_class pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;  // convergents
    int len = 0;
    while (true) {
        uint64_t ai = (P + s) / Q;
        mpz_class p = ai * pm1 + pm2, q = ai * qm1 + qm2;
        pm2 = pm1; pm1 = p; qm2 = qm1; qm1 = q;
        ++len;
        P = ai * Q - P;
        Q = (D - P * P) / Q;
        if (P == P0 && Q == Q0) break;
    }
    FundamentalUnit u;
    u.y = qm1;
    u.x = qm1 * P0 + 2 * qm2;
    u.norm = (len % 2 == 0) ? 1 : -1;
    mpz_class check = u.x * u.x - mpz_class(static_cast<long>(d)) * u.y * u.y;
    if (check != 4 * u.norm)
        throw std::logic_error("fundamental_unit: norm check failed");
    return cache.emplace(d, std::move(u)).first->second;
}

std::uint64_t real_quadratic_h(std::int64_t d) {
    if (d <= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("real_quadratic_h: d not a positive fundamental discriminant");
    static std::mutex mu;
    static std::map<std::int64_t, uint64_t> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    uint64_t D = static_cast<uint64_t>(d);
    uint64_t s = static_cast<uint64_t>(std::sqrt(static_cast<double>(D)));
    while (s * s > D) --s;
    while ((s + 1) * (s + 1) <= D) ++s;

    // all reduced indefinite forms (a, b, c): sqrt(d) - 2|a| < b < sqrt(d)
    struct Form {
        std::int64_t a, b, c;
        bool operator<(const Form& o) const {
            return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
        }
    };
    auto reduced = [&](std::int64_t a, uint64_t b) {
        uint64_t twoa = static_cast<uint64_t>(2 * (a < 0 ? -a : a));
        // |sqrt(D) - 2|a|| < b < sqrt(D):  b < sqrt(D) iff b <= s (b != sqrt)
        if (b * b >= D) return false;
        // (sqrt(D) - 2|a|)^2 < b^2 with sign care
        if (twoa <= s) {
            uint64_t diff = 0;
            // need sqrt(D) - twoa < b  <=>  D < (b + twoa)^2
            diff = b + twoa;
            return D < diff * diff;
        }
        // twoa > sqrt(D): need twoa - sqrt(D) < b <=> (twoa - b)^2 < D
        if (b >= twoa) return true;
        uint64_t diff = twoa - b;
        return diff * diff < D;
    };
    std::map<Form, int> forms;
    for (uint64_t b = (D & 1); b * b < D; b += 2) {
        if (b == 0) continue;
        uint64_t m4 = (D - b * b) / 4;  // = -a*c > 0
        for (uint64_t u = 1; u * u <= m4; ++u) {
            if (m4 % u) continue;
            uint64_t w = m4 / u;
            std::int64_t uu = static_cast<std::int64_t>(u);
            std::int64_t ww = static_cast<std::int64_t>(w);
            if (reduced(uu, b)) {
                forms.insert({{uu, static_cast<std::int64_t>(b), -ww}, 0});
                forms.insert({{-uu, static_cast<std::int64_t>(b), ww}, 0});
            }
            if (u != w && reduced(ww, b)) {
                forms.insert({{ww, static_cast<std::int64_t>(b), -uu}, 0});
                forms.insert({{-ww, static_cast<std::int64_t>(b), uu}, 0});
            }
        }
    }
    // rho-step: (a, b, c) -> (c, b', (b'^2 - D)/(4c)), b' = -b mod 2|c| in
    // the reduction window
    auto rho = [&](const Form& f) {
        // b' = largest integer <= floor(sqrt(D)) congruent to -b mod 2|c|;
        // that is the unique residue in the window (sqrt(D) - 2|c|, sqrt(D))
        std::int64_t c = f.c;
        std::int64_t twoc = 2 * (c < 0 ? -c : c);
        std::int64_t b0 = ((-f.b) % twoc + twoc) % twoc;
        std::int64_t ss = static_cast<std::int64_t>(s);
        std::int64_t bp = b0 + twoc * ((ss - b0) >= 0 ? (ss - b0) / twoc
                                                      : -(((b0 - ss) + twoc - 1) / twoc));
        mpz_class num = mpz_class(bp) * bp - mpz_class(static_cast<long>(D));
        mpz_class cp = num / (4 * c);
        return Form{c, bp, static_cast<std::int64_t>(cp.get_si())};
    };
    uint64_t cycles = 0;
    for (auto& [f, mark] : forms) {
        if (mark) continue;
        ++cycles;
        Form cur = f;
        while (true) {
            auto it = forms.find(cur);
            if (it == forms.end()) throw std::logic_error("real_quadratic_h: left the reduced set");
            if (it->second) break;
            it->second = 1;
            cur = rho(cur);
        }
    }
    uint64_t h = cycles;
    if (fundamental_unit(d).norm == 1) h /= 2;
    std::scoped_lock lock(mu);
    cache.emplace(d, h);
    return h;
}

mpz_class quartic_class_number(const CMStructure& cm) {
    if (cm.field.degree() != 4)
        throw std::invalid_argument("quartic_class_number: degree must be 4");
    auto r = relative_class_number(cm);
    if (r.q_index == QIndex::Ambiguous)
        throw std::logic_error("quartic_class_number: ambiguous Hasse index");
    std::int64_t d3 = static_cast<std::int64_t>(
        cm.real_subfield.discriminant_magnitude().get_ui());
    uint64_t hplus = cm.real_subfield.degree() == 1 ? 1 : real_quadratic_h(d3);
    mpz_class h = r.value.get_num();
    return h * static_cast<unsigned long>(hplus);
}

}  // namespace cmf::hminus
