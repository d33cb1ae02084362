#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "cmfields/cyclo.hpp"
#include "cmfields/fields.hpp"

namespace cmf::hminus {

using chars::DirichletCharacter;
using fields::CMStructure;

enum class QIndex { One, Two, Ambiguous };
enum class SieveSet { Yes, No, Ambiguous };

/// Relative class number h^- = Q * w * prod(-B_{1,chi}/2) over odd chi.
/// When q_index is Ambiguous, `value` holds the Q = 1 candidate and the
/// Q = 2 candidate is 2 * value.
struct HMinusResult {
    mpq_class value;
    QIndex q_index = QIndex::One;
    std::uint64_t w = 2;
    bool is_integer = false;
    SieveSet in_sieve_set = SieveSet::No;

    mpq_class other_candidate() const { return value * 2; }
};

/// B_{1,chi} = (1/f) sum_{a=1}^{f} a*chi(a), exact in Q(zeta_order).
/// Throws for even or trivial characters.
CycloRational bernoulli_b1(const DirichletCharacter& chi);

/// prod over a full Galois orbit of odd characters of (-B_{1,chi}/2);
/// always rational.  Throws if the orbit is incomplete or not odd.
mpq_class orbit_norm_product(std::span<const DirichletCharacter> orbit);

QIndex hasse_unit_index(const CMStructure& cm);

HMinusResult relative_class_number(const CMStructure& cm);

/// Class number of Q(sqrt(d)), d < 0 fundamental, by counting reduced forms.
std::uint64_t imaginary_quadratic_h(std::int64_t d);

/// Class number of Q(sqrt(d)), d > 0 fundamental, by counting cycles of
/// reduced indefinite forms (narrow count, halved when N(eps) = +1).
std::uint64_t real_quadratic_h(std::int64_t d);

/// Fundamental unit (x + y*sqrt(d))/2 of the order of discriminant d > 0;
/// norm is +1 or -1.
struct FundamentalUnit {
    mpz_class x, y;
    int norm = 1;
};
const FundamentalUnit& fundamental_unit(std::int64_t d);

/// h_L = h^- * h_{L+} for degree-4 abelian CM fields (Q always resolves).
mpz_class quartic_class_number(const CMStructure& cm);

bool is_fundamental_discriminant(std::int64_t d);

}  // namespace cmf::hminus
