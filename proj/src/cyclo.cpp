#include "cmfields/cyclo.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cmfields/arith.hpp"

namespace cmf::hminus {

namespace {

// exact division of integer polynomials, low-to-high coefficients
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<mpz_class>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d) continue;
        // compute recursively without re-locking
        std::vector<mpz_class>* phi_d;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            std::vector<mpz_class> nd(d + 1, 0);
            nd[0] = -1;
            nd[d] = 1;
            for (std::uint64_t e = 1; e < d; ++e)
                if (d % e == 0) nd = poly_div_exact(std::move(nd), cache.at(e));
            phi_d = &cache.emplace(d, std::move(nd)).first->second;
        } else {
            phi_d = &jt->second;
        }
        num = poly_div_exact(std::move(num), *phi_d);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

CycloRational::CycloRational(std::uint64_t n, mpq_class constant) : n_(n) {
    if (n == 0) throw std::invalid_argument("CycloRational: level must be positive");
    coeffs_.assign(arith::euler_phi(n), 0);
    if (coeffs_.empty()) coeffs_.assign(1, 0);
    constant.canonicalize();
    coeffs_[0] = std::move(constant);
}

CycloRational CycloRational::zeta_power(std::uint64_t n, std::uint64_t e) {
    CycloRational z(n);
    z.add_monomial(1, e % n);
    return z;
}

void CycloRational::add_monomial(const mpq_class& c, std::uint64_t e) {
    e %= n_;
    if (e < coeffs_.size()) {
        coeffs_[e] += c;
        return;
    }
    // reduce zeta^e modulo Phi_n: zeta^deg = -(lower coefficients)
    const auto& phi = cyclotomic_polynomial(n_);
    size_t deg = phi.size() - 1;
    std::vector<mpq_class> mono(e + 1, 0);
    mono[e] = c;
    for (size_t i = mono.size(); i-- > deg;) {
        if (mono[i] == 0) continue;
        mpq_class lead = mono[i];
        mono[i] = 0;
        for (size_t j = 0; j < deg; ++j) mono[i - deg + j] -= lead * phi[j];
    }
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += mono[i];
}

CycloRational& CycloRational::operator+=(const CycloRational& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("CycloRational: level mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("CycloRational: level mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloRational& CycloRational::operator*=(const CycloRational& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("CycloRational: level mismatch");
    CycloRational out(n_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.add_monomial(coeffs_[i] * rhs.coeffs_[j], i + j);
        }
    }
    *this = std::move(out);
    return *this;
}

CycloRational& CycloRational::operator*=(const mpq_class& c) {
    mpq_class cc = c;
    cc.canonicalize();
    for (auto& x : coeffs_) x *= cc;
    return *this;
}

CycloRational CycloRational::galois_image(std::uint64_t k) const {
    if (arith::gcd(k % n_, n_) != 1)
        throw std::invalid_argument("galois_image: k not coprime to level");
    CycloRational out(n_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.add_monomial(coeffs_[i], i * (k % n_) % n_);
    return out;
}

bool CycloRational::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

mpq_class CycloRational::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycloRational: value is irrational");
    return coeffs_[0];
}

}  // namespace cmf::hminus
