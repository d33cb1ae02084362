#include "cmfields/arith.hpp"

#include <algorithm>
#include <numeric>

namespace cmf::arith {

uint64_t gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr uint64_t kMrLimit = 3'300'000'000'000'00ULL;  // 3.3e14

uint64_t pollard_rho(uint64_t n) {
    // Brent's variant with batched gcds.
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, q = 1, ys = y;
        const uint64_t m = 64;
        uint64_t r = 1;
        auto f = [&](uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= kMrLimit)
        throw std::invalid_argument("is_prime: input above deterministic range");
    // Exact for n < 3.3e14 (Sorenson-Webster base set).
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17})
        if (!miller_rabin(n, a)) return false;
    return true;
}

Factorization factor(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    Factorization out;
    for (uint64_t p = 2; p * p <= n && p <= 1'000'000; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.factors.emplace_back(p, e);
    }
    if (n > 1) {
        std::vector<uint64_t> stack{n};
        std::vector<std::pair<uint64_t, int>> rest;
        while (!stack.empty()) {
            uint64_t m = stack.back();
            stack.pop_back();
            if (is_prime(m)) {
                auto it = std::find_if(rest.begin(), rest.end(),
                                       [&](auto& f) { return f.first == m; });
                if (it != rest.end())
                    ++it->second;
                else
                    rest.emplace_back(m, 1);
                continue;
            }
            uint64_t d = pollard_rho(m);
            stack.push_back(d);
            stack.push_back(m / d);
        }
        std::sort(rest.begin(), rest.end());
        out.factors.insert(out.factors.end(), rest.begin(), rest.end());
    }
    return out;
}

uint64_t euler_phi(const Factorization& f) {
    uint64_t r = 1;
    for (auto [p, e] : f.factors) {
        r *= p - 1;
        for (int i = 1; i < e; ++i) r *= p;
    }
    return r;
}

uint64_t euler_phi(uint64_t f) { return euler_phi(factor(f)); }

uint64_t crt_lift(std::span<const uint64_t> residues, std::span<const uint64_t> moduli) {
    if (residues.size() != moduli.size())
        throw std::invalid_argument("crt_lift: size mismatch");
    for (size_t i = 0; i < moduli.size(); ++i)
        for (size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]) != 1)
                throw std::invalid_argument("crt_lift: moduli not coprime");
    uint64_t m = 1, x = 0;
    for (size_t i = 0; i < moduli.size(); ++i) {
        uint64_t mi = moduli[i], ri = residues[i] % mi;
        // solve x + m*t == ri (mod mi)
        uint64_t minv = pow_mod(m % mi, euler_phi(mi) - 1, mi);
        uint64_t t = mul_mod((ri + mi - x % mi) % mi, minv, mi);
        x += m * t;
        m *= mi;
    }
    return x;
}

uint64_t multiplicative_order(uint64_t a, uint64_t m) {
    if (m == 1) return 1;
    if (gcd(a % m, m) != 1) throw std::invalid_argument("order: not a unit");
    uint64_t n = euler_phi(m), ord = n;
    for (auto [p, e] : factor(n).factors)
        while (ord % p == 0 && pow_mod(a, ord / p, m) == 1) ord /= p;
    return ord;
}

uint64_t primitive_root(uint64_t p, int e) {
    // smallest primitive root mod p, bumped by p if it fails to stay
    // primitive mod p^2 (then it is primitive mod every p^e)
    uint64_t phi = p - 1;
    auto fac = factor(phi);
    uint64_t g = 0;
    for (uint64_t c = 2; c < p; ++c) {
        bool ok = true;
        for (auto [q, _] : fac.factors)
            if (pow_mod(c, phi / q, p) == 1) { ok = false; break; }
        if (ok) { g = c; break; }
    }
    if (e == 1) return g;
    uint64_t p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

UnitGroupStructure unit_group(uint64_t f) {
    if (f == 0) throw std::invalid_argument("unit_group: modulus must be positive");
    UnitGroupStructure u;
    u.modulus = f;
    if (f <= 2) return u;
    auto fac = factor(f);
    struct Block { uint64_t pe, gen, ord; };
    std::vector<Block> blocks;
    for (auto [p, e] : fac.factors) {
        uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                blocks.push_back({pe, 3, 2});
            } else {
                blocks.push_back({pe, pe - 1, 2});
                blocks.push_back({pe, 5, pe / 4});
            }
        } else {
            uint64_t g = primitive_root(p, e);
            blocks.push_back({pe, g % pe, pe / p * (p - 1)});
        }
    }
    for (auto& b : blocks) {
        // lift: generator at its block, 1 elsewhere
        uint64_t rest = f / b.pe;
        if (rest == 1) {
            u.generators.push_back(b.gen % f);
        } else {
            uint64_t r[2] = {b.gen % b.pe, 1 % rest};
            uint64_t m[2] = {b.pe, rest};
            u.generators.push_back(crt_lift(r, m));
        }
        u.orders.push_back(b.ord);
    }
    return u;
}

}  // namespace cmf::arith
