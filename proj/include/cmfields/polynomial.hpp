#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cmf::verify {

/// Integer polynomial, coefficients low-to-high, no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly from_string_coeffs(const std::string& comma_separated);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& leading() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](size_t i) const { return c_[i]; }

    IntPoly derivative() const;
    IntPoly primitive_part() const;  // content removed, sign of lc preserved
    mpz_class content() const;       // non-negative
    IntPoly multiply(const IntPoly& rhs) const;
    /// Exact division; throws when the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& rhs) const;
    bool divides(const IntPoly& divisor) const;  // divisor | *this over Z

    bool operator==(const IntPoly&) const = default;

  private:
    std::vector<mpz_class> c_;
};

/// Resultant of p and q via the subresultant PRS.
mpz_class resultant(const IntPoly& p, const IntPoly& q);

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
mpz_class poly_discriminant(const IntPoly& p);

bool is_squarefree(const IntPoly& p);

/// Number of distinct real roots via Sturm sign variations at +-infinity.
/// Requires a squarefree polynomial.
int sturm_real_roots(const IntPoly& p);

/// Degrees (with multiplicity) of the irreducible factors of p mod `prime`;
/// requires p squarefree mod prime (empty result otherwise).
std::vector<int> modular_factor_degrees(const IntPoly& p, std::uint64_t prime);

enum class IrreducibilityMethod { ModularDegrees, Zassenhaus };

struct IrreducibilityResult {
    bool irreducible = false;
    IrreducibilityMethod method = IrreducibilityMethod::ModularDegrees;
};

/// Certify irreducibility over Q of a monic squarefree polynomial: modular
/// degree patterns first, full Zassenhaus factor search as the fallback.
IrreducibilityResult certify_irreducible(const IntPoly& p);

}  // namespace cmf::verify
