#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace cmf::hminus {

/// n-th cyclotomic polynomial, monic, as integer coefficients low-to-high.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n);

/// Exact element of Q(zeta_n) on the power basis 1, zeta, ..., zeta^(phi(n)-1).
class CycloRational {
  public:
    CycloRational() : n_(1), coeffs_(1, 0) {}
    explicit CycloRational(std::uint64_t n, mpq_class constant = 0);

    static CycloRational zeta_power(std::uint64_t n, std::uint64_t e);

    std::uint64_t level() const { return n_; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    CycloRational& operator+=(const CycloRational& rhs);
    CycloRational& operator-=(const CycloRational& rhs);
    CycloRational& operator*=(const CycloRational& rhs);
    CycloRational operator+(const CycloRational& r) const { auto t = *this; return t += r; }
    CycloRational operator-(const CycloRational& r) const { auto t = *this; return t -= r; }
    CycloRational operator*(const CycloRational& r) const { auto t = *this; return t *= r; }
    CycloRational& operator*=(const mpq_class& c);

    /// Image under zeta_n -> zeta_n^k, gcd(k, n) = 1.
    CycloRational galois_image(std::uint64_t k) const;

    bool is_rational() const;
    mpq_class rational_value() const;  // throws if not rational
    bool operator==(const CycloRational&) const = default;

  private:
    std::uint64_t n_;
    std::vector<mpq_class> coeffs_;  // length phi(n)

    void add_monomial(const mpq_class& c, std::uint64_t e);
};

}  // namespace cmf::hminus
