#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "cmfields/characters.hpp"

namespace cmf::fields {

using chars::DirichletCharacter;
using arith::uint64_t;

/// An abelian number field over Q, identified with its group X of primitive
/// Dirichlet characters.  X is kept sorted and closed under multiplication;
/// the discriminant magnitude is the product of the conductors in X.
class AbelianFieldSpec {
  public:
    static AbelianFieldSpec from_generators(std::span<const DirichletCharacter> gens);

    uint64_t degree() const { return static_cast<uint64_t>(X_.size()); }
    uint64_t conductor() const { return conductor_; }
    const mpz_class& discriminant_magnitude() const { return disc_; }
    bool totally_real() const { return totally_real_; }
    const std::vector<uint64_t>& galois_shape() const { return shape_; }  // d1 | d2 | ...
    const std::vector<DirichletCharacter>& characters() const { return X_; }

    bool operator==(const AbelianFieldSpec&) const = default;

  private:
    std::vector<DirichletCharacter> X_;
    uint64_t conductor_ = 1;
    mpz_class disc_ = 1;
    bool totally_real_ = true;
    std::vector<uint64_t> shape_;
};

struct CMStructure {
    AbelianFieldSpec field;
    AbelianFieldSpec real_subfield;  // even-character subgroup, index 2
    uint64_t w = 2;                  // number of roots of unity
};

/// Either the field is totally real, or it is CM and `cm` is populated.
struct CMClassification {
    bool is_cm = false;
    std::optional<CMStructure> cm;
};

CMClassification classify_cm(const AbelianFieldSpec& field);

/// Largest n with the full character group mod n contained in X (always even).
uint64_t roots_of_unity_order(const AbelianFieldSpec& field);

struct SubfieldInfo {
    AbelianFieldSpec spec;
    uint64_t index;  // [L : subfield]
    bool is_cm;
};

/// One entry per subgroup of X (including the trivial group and X itself).
std::vector<SubfieldInfo> subfield_specs(const AbelianFieldSpec& field);

/// Invariant factors (ascending, each dividing the next) of a finite abelian
/// group given by the multiplicative orders of all its elements.
std::vector<uint64_t> invariant_factors_from_orders(std::span<const uint64_t> orders);

}  // namespace cmf::fields
