#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmfields/arith.hpp"

namespace cmf::chars {

using arith::uint64_t;

/// A primitive Dirichlet character, stored by its exponents on the canonical
/// generators of (Z/fZ)* for f = conductor.  chi(g_i) = zeta_order^(e_i *
/// order / order(g_i)); value exponents are always relative to zeta_order.
class DirichletCharacter {
  public:
    /// Build from exponents on the generators of (Z/modulus Z)*; the result
    /// is reduced to its primitive version.
    static DirichletCharacter from_exponents(uint64_t modulus,
                                             std::span<const uint64_t> exponents);

    static DirichletCharacter trivial() { return from_exponents(1, {}); }

    /// The quadratic character attached to a fundamental discriminant d.
    static DirichletCharacter quadratic(std::int64_t d);

    uint64_t conductor() const { return conductor_; }
    uint64_t order() const { return order_; }
    bool is_odd() const { return odd_; }
    bool is_trivial() const { return order_ == 1; }
    const std::vector<uint64_t>& exponents() const { return exponents_; }

    /// Exponent e with chi(a) = zeta_order^e, or nullopt when gcd(a, f) > 1.
    std::optional<uint64_t> value_exponent(uint64_t a) const;

    DirichletCharacter operator*(const DirichletCharacter& rhs) const;
    DirichletCharacter power(uint64_t k) const;
    DirichletCharacter inverse() const { return power(order_ == 1 ? 1 : order_ - 1); }

    std::strong_ordering operator<=>(const DirichletCharacter& rhs) const;
    bool operator==(const DirichletCharacter&) const = default;

    /// Canonical "f:e1,e2,..." form used in reports.
    std::string key() const;

  private:
    uint64_t conductor_ = 1;
    std::vector<uint64_t> exponents_;  // on unit_group(conductor_) generators
    uint64_t order_ = 1;
    bool odd_ = false;
};

/// All phi(f) characters mod f, each reduced to its primitive version.
/// Characters of conductor strictly dividing f appear (induced ones), so the
/// result can contain duplicates only when f itself does (it does not).
std::vector<DirichletCharacter> all_characters(uint64_t f);

uint64_t conductor(const DirichletCharacter& chi);

/// Galois orbits of a multiplicatively closed set under chi -> chi^k,
/// gcd(k, order) = 1.  Throws std::invalid_argument if X is not closed.
std::vector<std::vector<DirichletCharacter>> galois_orbits(
    std::span<const DirichletCharacter> X);

}  // namespace cmf::chars
