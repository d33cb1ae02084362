#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cmf::arith {

using std::uint64_t;

/// Prime factorization, factors sorted ascending.
struct Factorization {
    std::vector<std::pair<uint64_t, int>> factors;

    uint64_t value() const {
        uint64_t n = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) n *= p;
        return n;
    }
    uint64_t radical() const {
        uint64_t r = 1;
        for (auto [p, e] : factors) r *= p;
        return r;
    }
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
uint64_t gcd(uint64_t a, uint64_t b);

/// Deterministic primality test (trial division + Miller-Rabin with a base
/// set exact below 3.3e14; inputs beyond that are rejected).
bool is_prime(uint64_t n);

/// Exact factorization: trial division to 1e6, Pollard rho beyond.
Factorization factor(uint64_t n);

uint64_t euler_phi(uint64_t f);
uint64_t euler_phi(const Factorization& f);

/// CRT lift; throws std::invalid_argument if moduli are not pairwise coprime.
uint64_t crt_lift(std::span<const uint64_t> residues, std::span<const uint64_t> moduli);

/// Multiplicative order of a mod m (a coprime to m).
uint64_t multiplicative_order(uint64_t a, uint64_t m);

/// Smallest primitive root mod p^e (p odd prime).
uint64_t primitive_root(uint64_t p, int e);

/// Cyclic decomposition of (Z/fZ)*.  Generators are canonical: the 2-block
/// contributes {-1, 5} for 2^e with e >= 3 (or {3} for e = 2), odd prime
/// power blocks contribute their smallest primitive root, blocks ordered by
/// ascending prime.
struct UnitGroupStructure {
    uint64_t modulus = 1;
    std::vector<uint64_t> generators;
    std::vector<uint64_t> orders;
};

UnitGroupStructure unit_group(uint64_t f);

}  // namespace cmf::arith
