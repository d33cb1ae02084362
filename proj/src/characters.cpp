#include "cmfields/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cmf::chars {

using arith::gcd;
using arith::mul_mod;
using arith::pow_mod;

namespace {

// One cyclic factor of (Z/fZ)*.  The 2-part contributes a sign block
// (generated by -1, or by 3 when 4 || f) and, for 8 | f, a block generated
// by 5; odd prime powers are cyclic.
struct Block {
    uint64_t prime;
    int exp;
    uint64_t prime_pow;
    uint64_t gen;    // generator residue mod prime_pow
    uint64_t order;  // multiplicative order of gen
    bool sign_block;
    bool five_block;
};

uint64_t bsgs(uint64_t gamma, uint64_t h, uint64_t q, uint64_t m) {
    // dlog of h base gamma where gamma has prime order q mod m
    uint64_t step = 1;
    while (step * step < q) ++step;
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(step);
    uint64_t cur = 1;
    for (uint64_t j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = mul_mod(cur, gamma, m);
    }
    uint64_t giant = pow_mod(gamma, q - step % q, m);  // gamma^(-step)
    cur = h % m;
    for (uint64_t i = 0; i <= q / step + 1; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * step + it->second) % q;
        cur = mul_mod(cur, giant, m);
    }
    throw std::logic_error("bsgs: element not in subgroup");
}

uint64_t cyclic_dlog(uint64_t g, uint64_t h, uint64_t n, uint64_t m) {
    // Pohlig-Hellman in <g> of order n mod m
    auto fac = arith::factor(n);
    std::vector<uint64_t> residues, moduli;
    for (auto [q, k] : fac.factors) {
        uint64_t qk = 1;
        for (int i = 0; i < k; ++i) qk *= q;
        uint64_t gq = pow_mod(g, n / qk, m);
        uint64_t hq = pow_mod(h, n / qk, m);
        uint64_t gamma = pow_mod(gq, qk / q, m);
        uint64_t x = 0, qi = 1;
        for (int i = 0; i < k; ++i) {
            uint64_t rhs = mul_mod(hq, pow_mod(gq, qk - x % qk, m), m);
            rhs = pow_mod(rhs, qk / (qi * q), m);
            uint64_t d = bsgs(gamma, rhs, q, m);
            x += d * qi;
            qi *= q;
        }
        residues.push_back(x % qk);
        moduli.push_back(qk);
    }
    if (moduli.empty()) return 0;
    return arith::crt_lift(residues, moduli);
}

constexpr uint64_t kDlogTableLimit = 8192;

struct GroupData {
    uint64_t modulus;
    std::vector<Block> blocks;
    arith::UnitGroupStructure ugs;
    // direct dlog lookup per block (residue -> exponent) for small moduli
    std::vector<std::vector<uint32_t>> tables;

    explicit GroupData(uint64_t f) : modulus(f), ugs(arith::unit_group(f)) {
        auto fac = arith::factor(f);
        for (auto [p, e] : fac.factors) {
            uint64_t pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            if (p == 2) {
                if (e == 1) continue;
                if (e == 2) {
                    blocks.push_back({2, e, pe, 3, 2, true, false});
                } else {
                    blocks.push_back({2, e, pe, pe - 1, 2, true, false});
                    blocks.push_back({2, e, pe, 5, pe / 4, false, true});
                }
            } else {
                uint64_t g = arith::primitive_root(p, e) % pe;
                blocks.push_back({p, e, pe, g, pe / p * (p - 1), false, false});
            }
        }
        tables.resize(blocks.size());
        for (size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            if (b.sign_block || b.prime_pow > kDlogTableLimit) continue;
            auto& t = tables[i];
            t.assign(b.prime_pow, 0);
            uint64_t g = b.five_block ? 5 : b.gen, x = 1;
            for (uint64_t j = 0; j < b.order; ++j) {
                t[x] = static_cast<uint32_t>(j);
                x = mul_mod(x, g, b.prime_pow);
            }
        }
    }

    // exponents of a on the block generators
    std::vector<uint64_t> dlog(uint64_t a) const {
        std::vector<uint64_t> out;
        out.reserve(blocks.size());
        for (size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            uint64_t r = a % b.prime_pow;
            if (b.sign_block) {
                out.push_back(r % 4 == 3 ? 1 : 0);
            } else if (b.five_block) {
                if (r % 4 == 3) r = b.prime_pow - r;
                out.push_back(tables[i].empty() ? cyclic_dlog(5, r, b.order, b.prime_pow)
                                                : tables[i][r]);
            } else {
                out.push_back(tables[i].empty()
                                  ? cyclic_dlog(b.gen, r, b.order, b.prime_pow)
                                  : tables[i][r]);
            }
        }
        return out;
    }
};

const GroupData& group_data(uint64_t f) {
    static std::mutex mu;
    static std::map<uint64_t, std::unique_ptr<GroupData>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[f];
    if (!slot) slot = std::make_unique<GroupData>(f);
    return *slot;
}

// local conductor of the block-component with exponent e
uint64_t local_conductor(const Block& b, uint64_t e) {
    e %= b.order;
    if (e == 0) return 1;
    if (b.sign_block) return 4;
    uint64_t o = b.order / gcd(b.order, e);
    if (b.five_block) return 4 * o;
    // odd p: conductor p^(1 + v_p(o))
    uint64_t c = b.prime;
    while (o % b.prime == 0) o /= b.prime, c *= b.prime;
    return c;
}

// representative of a mod target coprime to full modulus
uint64_t coprime_lift(uint64_t a, uint64_t target, uint64_t full) {
    if (full == target) return a % full;
    std::vector<uint64_t> residues{a % target}, moduli{target};
    auto fac = arith::factor(full);
    for (auto [p, e] : fac.factors) {
        if (target % p == 0) continue;
        uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        residues.push_back(1);
        moduli.push_back(pe);
    }
    return arith::crt_lift(residues, moduli);
}

}  // namespace

DirichletCharacter DirichletCharacter::from_exponents(
    uint64_t modulus, std::span<const uint64_t> exponents) {
    if (modulus == 0) throw std::invalid_argument("character: modulus must be positive");
    const GroupData& gd = group_data(modulus);
    if (exponents.size() != gd.blocks.size())
        throw std::invalid_argument("character: exponent count != generator count");

    // compute conductor from local components
    uint64_t cond = 1;
    uint64_t two_part = 1;
    for (size_t i = 0; i < gd.blocks.size(); ++i) {
        uint64_t lc = local_conductor(gd.blocks[i], exponents[i]);
        if (gd.blocks[i].prime == 2)
            two_part = std::max(two_part, lc);
        else
            cond *= lc;
    }
    cond *= two_part;

    DirichletCharacter chi;
    if (cond == modulus) {
        chi.conductor_ = cond;
        chi.exponents_.assign(exponents.begin(), exponents.end());
        for (size_t i = 0; i < chi.exponents_.size(); ++i)
            chi.exponents_[i] %= gd.blocks[i].order;
    } else {
        // evaluate at the generators of the primitive modulus
        const GroupData& pd = group_data(cond);
        uint64_t m = 1;
        for (size_t i = 0; i < gd.blocks.size(); ++i) {
            uint64_t e = exponents[i] % gd.blocks[i].order;
            if (e) m = std::lcm(m, gd.blocks[i].order / gcd(gd.blocks[i].order, e));
        }
        std::vector<uint64_t> newexp;
        for (size_t j = 0; j < pd.blocks.size(); ++j) {
            uint64_t g = pd.blocks[j].five_block
                             ? coprime_lift(5, pd.blocks[j].prime_pow, modulus)
                             : coprime_lift(pd.blocks[j].gen, pd.blocks[j].prime_pow, modulus);
            // value exponent of chi at g relative to zeta_m:
            // chi(g_i) = zeta_ni^{e_i}, so the contribution is e_i*t_i*(m/ni)
            auto t = gd.dlog(g % modulus);
            uint64_t v = 0;
            for (size_t i = 0; i < gd.blocks.size(); ++i) {
                uint64_t ni = gd.blocks[i].order;
                uint64_t scaled = static_cast<uint64_t>(
                    (static_cast<unsigned __int128>(exponents[i] % ni) * (t[i] % ni)) % ni);
                uint64_t term = static_cast<uint64_t>(
                    (static_cast<unsigned __int128>(scaled) * m / ni) % m);
                v = (v + term) % m;
            }
            uint64_t nj = pd.blocks[j].order;
            // chi(g) is an nj-th and an m-th root of unity; store on the nj basis
            unsigned __int128 num = static_cast<unsigned __int128>(v) * nj;
            newexp.push_back(static_cast<uint64_t>((num / m) % nj));
        }
        chi.conductor_ = cond;
        chi.exponents_ = std::move(newexp);
    }

    const GroupData& cd = group_data(chi.conductor_);
    chi.order_ = 1;
    bool odd = false;
    for (size_t i = 0; i < cd.blocks.size(); ++i) {
        uint64_t ni = cd.blocks[i].order, e = chi.exponents_[i];
        if (e) chi.order_ = std::lcm(chi.order_, ni / gcd(ni, e));
        if (cd.blocks[i].sign_block)
            odd ^= (e & 1);
        else if (!cd.blocks[i].five_block)
            odd ^= (e & 1);  // chi_p(-1) = (-1)^e for odd p
    }
    chi.odd_ = odd;
    return chi;
}

std::optional<uint64_t> DirichletCharacter::value_exponent(uint64_t a) const {
    if (conductor_ == 1) return 0;
    if (gcd(a % conductor_, conductor_) != 1) return std::nullopt;
    const GroupData& gd = group_data(conductor_);
    auto t = gd.dlog(a % conductor_);
    uint64_t m = order_, v = 0;
    for (size_t i = 0; i < gd.blocks.size(); ++i) {
        uint64_t ni = gd.blocks[i].order;
        uint64_t scaled = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(exponents_[i]) * (t[i] % ni)) % ni);
        uint64_t term = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(scaled) * m / ni) % m);
        v = (v + term) % m;
    }
    return v;
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& rhs) const {
    uint64_t M = std::lcm(conductor_, rhs.conductor_);
    const GroupData& gd = group_data(M);
    uint64_t m1 = order_, m2 = rhs.order_, m = std::lcm(m1, m2);
    std::vector<uint64_t> exps;
    exps.reserve(gd.blocks.size());
    for (const auto& b : gd.blocks) {
        uint64_t g = b.five_block ? coprime_lift(5, b.prime_pow, M)
                                  : coprime_lift(b.gen, b.prime_pow, M);
        uint64_t v1 = *value_exponent(g);
        uint64_t v2 = *rhs.value_exponent(g);
        uint64_t v = (static_cast<unsigned __int128>(v1) * (m / m1) +
                      static_cast<unsigned __int128>(v2) * (m / m2)) % m;
        unsigned __int128 num = static_cast<unsigned __int128>(v) * b.order;
        exps.push_back(static_cast<uint64_t>((num / m) % b.order));
    }
    return from_exponents(M, exps);
}

DirichletCharacter DirichletCharacter::power(uint64_t k) const {
    const GroupData& gd = group_data(conductor_);
    std::vector<uint64_t> exps(exponents_);
    for (size_t i = 0; i < exps.size(); ++i)
        exps[i] = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(exps[i]) * k) % gd.blocks[i].order);
    return from_exponents(conductor_, exps);
}

namespace {
int kronecker_symbol(std::int64_t a, std::int64_t n);

int kronecker_2(std::int64_t a) {  // (a/2)
    if (a % 2 == 0) return 0;
    std::int64_t r = a % 8;
    if (r < 0) r += 8;
    return (r == 1 || r == 7) ? 1 : -1;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int v = 0;
    while (n % 2 == 0) n /= 2, ++v;
    int result = sign;
    if (v % 2) result *= kronecker_2(a);
    a %= n;
    if (a < 0) a += n;
    // Jacobi symbol (a/n), n odd positive
    while (a != 0) {
        int t = 0;
        while (a % 2 == 0) a /= 2, ++t;
        if (t % 2) {
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}
}  // namespace

DirichletCharacter DirichletCharacter::quadratic(std::int64_t d) {
    if (d == 1) return trivial();
    uint64_t f = static_cast<uint64_t>(d < 0 ? -d : d);
    uint64_t r = static_cast<uint64_t>(((d % 4) + 4) % 4);
    if (r != 0 && r != 1)
        throw std::invalid_argument("quadratic: d not a discriminant");
    const GroupData& gd = group_data(f);
    std::vector<uint64_t> exps;
    for (const auto& b : gd.blocks) {
        uint64_t g = b.five_block ? coprime_lift(5, b.prime_pow, f)
                                  : coprime_lift(b.gen, b.prime_pow, f);
        int val = kronecker_symbol(d, static_cast<std::int64_t>(g));
        exps.push_back(val == 1 ? 0 : b.order / 2);
    }
    auto chi = from_exponents(f, exps);
    if (chi.conductor() != f || chi.order() != 2)
        throw std::invalid_argument("quadratic: d is not a fundamental discriminant");
    return chi;
}

std::strong_ordering DirichletCharacter::operator<=>(const DirichletCharacter& rhs) const {
    if (auto c = conductor_ <=> rhs.conductor_; c != 0) return c;
    return exponents_ <=> rhs.exponents_;
}

std::string DirichletCharacter::key() const {
    std::ostringstream os;
    os << conductor_ << ':';
    for (size_t i = 0; i < exponents_.size(); ++i)
        os << (i ? "," : "") << exponents_[i];
    return os.str();
}

std::vector<DirichletCharacter> all_characters(uint64_t f) {
    const GroupData& gd = group_data(f);
    std::vector<DirichletCharacter> out;
    std::vector<uint64_t> exps(gd.blocks.size(), 0);
    while (true) {
        out.push_back(DirichletCharacter::from_exponents(f, exps));
        size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < gd.blocks[i].order) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

std::vector<std::vector<DirichletCharacter>> galois_orbits(
    std::span<const DirichletCharacter> X) {
    std::vector<DirichletCharacter> sorted(X.begin(), X.end());
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&](const DirichletCharacter& c) {
        return std::binary_search(sorted.begin(), sorted.end(), c);
    };
    for (const auto& a : sorted)
        for (const auto& b : sorted)
            if (!contains(a * b))
                throw std::invalid_argument("galois_orbits: set not closed under products");
    std::vector<std::vector<DirichletCharacter>> orbits;
    std::vector<bool> used(sorted.size(), false);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        std::vector<DirichletCharacter> orbit;
        for (uint64_t k = 1; k <= sorted[i].order(); ++k) {
            if (gcd(k, sorted[i].order()) != 1) continue;
            auto c = sorted[i].power(k);
            auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
            size_t idx = static_cast<size_t>(it - sorted.begin());
            if (!used[idx]) {
                used[idx] = true;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace cmf::chars
