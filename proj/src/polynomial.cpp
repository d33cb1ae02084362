#include "cmfields/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cmfields/arith.hpp"

namespace cmf::verify {

using arith::mul_mod;
using arith::pow_mod;
using std::uint64_t;

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_string_coeffs(const std::string& text) {
    std::vector<mpz_class> c;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) c.emplace_back(item);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    std::vector<mpz_class> c(c_);
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::multiply(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> out(c_.size() + rhs.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("poly division by zero");
    std::vector<mpz_class> rem(c_);
    if (degree() < rhs.degree()) throw std::invalid_argument("poly division: degree");
    std::vector<mpz_class> q(c_.size() - rhs.c_.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class t = rem[i + rhs.c_.size() - 1];
        if (t % rhs.leading() != 0) throw std::invalid_argument("poly division: inexact");
        t /= rhs.leading();
        q[i] = t;
        if (t == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) rem[i + j] -= t * rhs.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::invalid_argument("poly division: nonzero remainder");
    return IntPoly(std::move(q));
}

bool IntPoly::divides(const IntPoly& divisor) const {
    if (divisor.is_zero() || degree() < divisor.degree()) return false;
    try {
        divide_exact(divisor);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

// pseudo-remainder: lc(B)^(degA - degB + 1) * A = Q*B + R
IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B) {
    std::vector<mpz_class> r(A.coeffs());
    const auto& b = B.coeffs();
    int da = A.degree(), db = B.degree();
    for (int i = da; i >= db; --i) {
        mpz_class lead = r[static_cast<size_t>(i)];
        for (auto& x : r) x *= B.leading();
        if (lead != 0)
            for (int j = 0; j <= db; ++j)
                r[static_cast<size_t>(i - db + j)] -= lead * b[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(std::max(db, 0)));
    return IntPoly(std::move(r));
}

mpq_class mpz_pow_q(const mpz_class& base, long e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpq_class q(p);
    if (e < 0) q = 1 / q;
    return q;
}

}  // namespace

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    IntPoly A = p, B = q;
    mpq_class acc = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) acc = -acc;
        std::swap(A, B);
    }
    while (true) {
        if (B.degree() == 0) {
            mpz_class lb = B.leading(), out;
            mpz_pow_ui(out.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(A.degree()));
            mpq_class res = acc * out;
            res.canonicalize();
            if (res.get_den() != 1) throw std::logic_error("resultant: non-integral");
            return res.get_num();
        }
        int da = A.degree(), db = B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return 0;
        int dr = R.degree();
        // Res(A,B) = (-1)^(da db) Res(B,A);  Res(B,R) = lc(B)^(dr + (delta+1)db - da) Res(B,A)
        if ((da & 1) && (db & 1)) acc = -acc;
        long e = static_cast<long>(da) - dr - (static_cast<long>(da) - db + 1) * db;
        acc *= mpz_pow_q(B.leading(), e);
        // keep the chain primitive: Res(B, R/c) = Res(B, R) / c^db
        mpz_class c = R.content();
        if (c > 1) {
            acc *= mpz_pow_q(c, db);
            R = R.primitive_part();
        }
        A = std::move(B);
        B = std::move(R);
    }
}

mpz_class poly_discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    mpz_class res = resultant(p, p.derivative());
    long n = p.degree();
    mpz_class out = res / p.leading();
    if (((n * (n - 1) / 2) & 1) != 0) out = -out;
    return out;
}

bool is_squarefree(const IntPoly& p) {
    if (p.degree() < 1) return true;
    return poly_discriminant(p) != 0;
}

int sturm_real_roots(const IntPoly& p) {
    if (p.degree() < 1) return 0;
    if (!is_squarefree(p)) throw std::invalid_argument("sturm: polynomial must be squarefree");
    std::vector<IntPoly> chain{p.primitive_part(), p.derivative().primitive_part()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = pseudo_rem(a, b);
        // make the effective multiplier positive so signs follow Sturm's rule
        int delta = a.degree() - b.degree();
        if (b.leading() < 0 && (delta + 1) % 2 == 1) {
            std::vector<mpz_class> neg(r.coeffs());
            for (auto& x : neg) x = -x;
            r = IntPoly(std::move(neg));
        }
        if (r.is_zero()) break;
        std::vector<mpz_class> neg(r.primitive_part().coeffs());
        for (auto& x : neg) x = -x;
        chain.push_back(IntPoly(std::move(neg)));
    }
    auto variations = [&](bool at_minus_infinity) {
        int v = 0, prev = 0;
        for (const auto& f : chain) {
            if (f.is_zero()) continue;
            int s = mpz_sgn(f.leading().get_mpz_t());
            if (at_minus_infinity && (f.degree() & 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(true) - variations(false);
}

// ------------------------------------------------------------ mod-p engine

namespace {

using FpPoly = std::vector<uint64_t>;  // low-to-high, trimmed

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_from(const IntPoly& p, uint64_t q) {
    FpPoly f;
    for (const auto& c : p.coeffs()) {
        mpz_class r = c % static_cast<unsigned long>(q);
        if (r < 0) r += static_cast<unsigned long>(q);
        f.push_back(r.get_ui());
    }
    trim(f);
    return f;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t q) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % q;
    }
    trim(out);
    return out;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t q) {
    uint64_t inv = pow_mod(b.back(), q - 2, q);
    while (a.size() >= b.size()) {
        uint64_t t = mul_mod(a.back(), inv, q);
        if (t)
            for (size_t j = 0; j < b.size(); ++j) {
                size_t idx = a.size() - b.size() + j;
                a[idx] = (a[idx] + q - mul_mod(t, b[j], q)) % q;
            }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t q) {
    while (!b.empty()) {
        auto r = fp_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t inv = pow_mod(a.back(), q - 2, q);
        for (auto& x : a) x = mul_mod(x, inv, q);
    }
    return a;
}

FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& mod, uint64_t q) {
    FpPoly result{1};
    base = fp_rem(std::move(base), mod, q);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, base, q), mod, q);
        base = fp_rem(fp_mul(base, base, q), mod, q);
        e >>= 1;
    }
    return result;
}

FpPoly fp_monic(FpPoly f, uint64_t q) {
    if (f.empty()) return f;
    uint64_t inv = pow_mod(f.back(), q - 2, q);
    for (auto& x : f) x = mul_mod(x, inv, q);
    return f;
}

// distinct-degree decomposition of a squarefree monic f: (degree, product)
std::vector<std::pair<int, FpPoly>> fp_ddf(FpPoly f, uint64_t q) {
    std::vector<std::pair<int, FpPoly>> out;
    FpPoly x{0, 1};
    FpPoly h = fp_rem(x, f, q);  // x^(q^i) mod f, iterated
    int i = 0;
    while (static_cast<int>(f.size()) - 1 >= 2 * (i + 1)) {
        ++i;
        h = fp_powmod(std::move(h), q, f, q);
        FpPoly diff = h;
        // h - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + q - 1) % q;
        trim(diff);
        FpPoly g = fp_gcd(f, diff, q);
        if (g.size() > 1) {
            out.emplace_back(i, g);
            // f /= g
            FpPoly quotient;
            {
                // exact division in Fp[x]
                FpPoly rem = f;
                FpPoly qt(f.size() - g.size() + 1, 0);
                uint64_t inv = pow_mod(g.back(), q - 2, q);
                for (size_t k = qt.size(); k-- > 0;) {
                    uint64_t t = mul_mod(rem[k + g.size() - 1], inv, q);
                    qt[k] = t;
                    if (t)
                        for (size_t j = 0; j < g.size(); ++j)
                            rem[k + j] = (rem[k + j] + q - mul_mod(t, g[j], q)) % q;
                }
                quotient = std::move(qt);
                trim(quotient);
            }
            f = std::move(quotient);
            h = fp_rem(h, f, q);
        }
    }
    if (f.size() > 2) out.emplace_back(static_cast<int>(f.size()) - 1, f);
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus) of a product of degree-d primes
void fp_edf(const FpPoly& f, int d, uint64_t q, std::vector<FpPoly>& out,
            uint64_t& seed) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(fp_monic(f, q));
        return;
    }
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    mpz_class expo = (qe - 1) / 2;
    while (true) {
        // deterministic pseudo-random polynomial of degree < n
        FpPoly r(static_cast<size_t>(n), 0);
        for (auto& c : r) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            c = (seed >> 16) % q;
        }
        trim(r);
        if (r.size() <= 1) continue;
        FpPoly t = fp_powmod(r, expo, f, q);
        if (t.empty()) continue;
        t[0] = (t[0] + q - 1) % q;  // t - 1
        trim(t);
        FpPoly g = fp_gcd(f, t, q);
        if (g.size() > 1 && g.size() < f.size()) {
            fp_edf(g, d, q, out, seed);
            // f / g
            FpPoly rem = f;
            FpPoly qt(f.size() - g.size() + 1, 0);
            uint64_t inv = pow_mod(g.back(), q - 2, q);
            for (size_t k = qt.size(); k-- > 0;) {
                uint64_t tt = mul_mod(rem[k + g.size() - 1], inv, q);
                qt[k] = tt;
                if (tt)
                    for (size_t j = 0; j < g.size(); ++j)
                        rem[k + j] = (rem[k + j] + q - mul_mod(tt, g[j], q)) % q;
            }
            trim(qt);
            fp_edf(qt, d, q, out, seed);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, uint64_t q) {
    std::vector<FpPoly> out;
    uint64_t seed = 0x9e3779b97f4a7c15ULL ^ q;
    for (auto& [d, g] : fp_ddf(fp_monic(f, q), q)) fp_edf(g, d, q, out, seed);
    std::sort(out.begin(), out.end());
    return out;
}

constexpr uint64_t kPrimePool[] = {
    10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093,
    10099, 10103, 10111, 10133, 10139, 10141, 10151, 10159, 10163, 10169,
    10177, 10181, 10193, 10211, 10223, 10243, 10247, 10253, 10259, 10267,
    10271, 10273, 10289, 10301, 10303, 10313, 10321, 10331, 10333, 10337,
};

bool squarefree_mod(const IntPoly& p, uint64_t q) {
    auto f = fp_from(p, q);
    if (static_cast<int>(f.size()) - 1 != p.degree()) return false;  // lc vanished
    FpPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mul_mod(f[i], i % q, q));
    trim(d);
    if (d.empty()) return false;
    return fp_gcd(f, d, q).size() == 1;
}

}  // namespace

std::vector<int> modular_factor_degrees(const IntPoly& p, uint64_t prime) {
    if (!squarefree_mod(p, prime)) return {};
    auto f = fp_from(p, prime);
    std::vector<int> degrees;
    int consumed = 0;
    for (auto& [d, g] : fp_ddf(fp_monic(f, prime), prime)) {
        int count = (static_cast<int>(g.size()) - 1) / d;
        for (int i = 0; i < count; ++i) degrees.push_back(d);
        consumed += static_cast<int>(g.size()) - 1;
    }
    (void)consumed;
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

namespace {

// achievable proper factor degrees as subset sums of the modular pattern
std::set<int> subset_sums(const std::vector<int>& degrees, int n) {
    std::vector<char> reach(static_cast<size_t>(n + 1), 0);
    reach[0] = 1;
    for (int d : degrees)
        for (int s = n - d; s >= 0; --s)
            if (reach[static_cast<size_t>(s)]) reach[static_cast<size_t>(s + d)] = 1;
    std::set<int> out;
    for (int s = 1; s < n; ++s)
        if (reach[static_cast<size_t>(s)]) out.insert(s);
    return out;
}

// Hensel lift f = g*h from mod p to mod p^iters (linear steps)
void hensel_pair(const IntPoly& f, FpPoly g0, FpPoly h0, uint64_t p, const mpz_class& pk,
                 std::vector<mpz_class>& gout, std::vector<mpz_class>& hout) {
    // Bezout: s*g0 + t*h0 = 1 mod p
    FpPoly s, t;
    {
        FpPoly r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            // divmod r0 = q*r1 + r
            FpPoly rem = r0, quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
            uint64_t inv = pow_mod(r1.back(), p - 2, p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                uint64_t c = mul_mod(rem.back(), inv, p);
                size_t shift = rem.size() - r1.size();
                quo[shift] = c;
                for (size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = (rem[shift + j] + p - mul_mod(c, r1[j], p)) % p;
                trim(rem);
                if (rem.empty()) break;
            }
            auto comb = [&](const FpPoly& a, const FpPoly& b) {
                FpPoly o = a;
                auto qb = fp_mul(quo, b, p);
                if (o.size() < qb.size()) o.resize(qb.size(), 0);
                for (size_t i = 0; i < qb.size(); ++i) o[i] = (o[i] + p - qb[i]) % p;
                trim(o);
                return o;
            };
            FpPoly ns = comb(s0, s1), nt = comb(t0, t1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(ns);
            t0 = std::move(t1);
            t1 = std::move(nt);
        }
        // r0 = gcd (a unit); normalize to 1
        uint64_t inv = pow_mod(r0[0], p - 2, p);
        for (auto& x : s0) x = mul_mod(x, inv, p);
        for (auto& x : t0) x = mul_mod(x, inv, p);
        s = std::move(s0);
        t = std::move(t0);
    }
    // integer lifts of g, h with coefficients mod p^i
    std::vector<mpz_class> g(g0.begin(), g0.end()), h(h0.begin(), h0.end());
    mpz_class m = p;
    auto poly_mul_z = [](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> o(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) o[i + j] += a[i] * b[j];
        return o;
    };
    while (m < pk) {
        // e = (f - g h) / m mod p
        auto gh = poly_mul_z(g, h);
        std::vector<mpz_class> e(std::max(f.coeffs().size(), gh.size()), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            mpz_class v = (i < f.coeffs().size() ? f.coeffs()[i] : mpz_class(0)) -
                          (i < gh.size() ? gh[i] : mpz_class(0));
            v /= m;
            mpz_class r = v % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            e[i] = r;
        }
        FpPoly ef;
        for (auto& v : e) ef.push_back(v.get_ui());
        trim(ef);
        // s e = q h0 + r_;  delta_h = r_, delta_g = t e + q g0
        FpPoly se = fp_mul(s, ef, p);
        FpPoly rem = se, quo;
        {
            quo.assign(se.size() >= h0.size() ? se.size() - h0.size() + 1 : 0, 0);
            uint64_t inv = pow_mod(h0.back(), p - 2, p);
            while (rem.size() >= h0.size() && !rem.empty()) {
                uint64_t c = mul_mod(rem.back(), inv, p);
                size_t shift = rem.size() - h0.size();
                quo[shift] = c;
                for (size_t j = 0; j < h0.size(); ++j)
                    rem[shift + j] = (rem[shift + j] + p - mul_mod(c, h0[j], p)) % p;
                trim(rem);
            }
        }
        FpPoly dh = rem;
        FpPoly dg = fp_mul(t, ef, p);
        {
            auto qg = fp_mul(quo, g0, p);
            if (dg.size() < qg.size()) dg.resize(qg.size(), 0);
            for (size_t i = 0; i < qg.size(); ++i) dg[i] = (dg[i] + qg[i]) % p;
            trim(dg);
        }
        if (dg.size() > g0.size() - 1) dg.resize(g0.size() - 1);  // deg dg < deg g
        if (g.size() < g0.size()) g.resize(g0.size(), 0);
        if (h.size() < h0.size()) h.resize(h0.size(), 0);
        for (size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
        for (size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
        m *= static_cast<unsigned long>(p);
    }
    gout = std::move(g);
    hout = std::move(h);
}

// lift the full modular factorization to mod p^k via a recursive split
void hensel_tree(const IntPoly& f, const std::vector<FpPoly>& factors, uint64_t p,
                 const mpz_class& pk, std::vector<std::vector<mpz_class>>& out) {
    if (factors.size() == 1) {
        // f itself mod p^k, coefficients reduced symmetrically later
        std::vector<mpz_class> g;
        for (const auto& c : f.coeffs()) {
            mpz_class r = c % pk;
            if (r < 0) r += pk;
            g.push_back(r);
        }
        out.push_back(std::move(g));
        return;
    }
    size_t half = factors.size() / 2;
    FpPoly g0{1}, h0{1};
    for (size_t i = 0; i < half; ++i) g0 = fp_mul(g0, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i], p);
    std::vector<mpz_class> g, h;
    hensel_pair(f, g0, h0, p, pk, g, h);
    IntPoly gz{std::vector<mpz_class>(g)}, hz{std::vector<mpz_class>(h)};
    hensel_tree(gz, {factors.begin(), factors.begin() + static_cast<long>(half)}, p, pk, out);
    hensel_tree(hz, {factors.begin() + static_cast<long>(half), factors.end()}, p, pk, out);
}

}  // namespace

IrreducibilityResult certify_irreducible(const IntPoly& p) {
    if (p.degree() <= 0) throw std::invalid_argument("irreducibility: degree must be >= 1");
    if (p.leading() != 1) throw std::invalid_argument("irreducibility: polynomial must be monic");
    if (p.degree() == 1) return {true, IrreducibilityMethod::ModularDegrees};
    if (!is_squarefree(p)) return {false, IrreducibilityMethod::ModularDegrees};
    const int n = p.degree();

    std::set<int> possible;
    bool first = true;
    uint64_t best_prime = 0;
    size_t best_count = static_cast<size_t>(n) + 1;
    for (uint64_t q : kPrimePool) {
        auto degs = modular_factor_degrees(p, q);
        if (degs.empty()) continue;
        if (degs.size() == 1) return {true, IrreducibilityMethod::ModularDegrees};
        if (degs.size() < best_count) {
            best_count = degs.size();
            best_prime = q;
        }
        auto sums = subset_sums(degs, n);
        if (first) {
            possible = std::move(sums);
            first = false;
        } else {
            std::set<int> inter;
            std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            possible = std::move(inter);
        }
        if (possible.empty()) return {true, IrreducibilityMethod::ModularDegrees};
    }
    if (first) throw std::logic_error("irreducibility: no usable prime (is p squarefree?)");

    // Zassenhaus fallback: lift the factorization with the fewest factors and
    // search factor subsets
    uint64_t q = best_prime;
    auto factors = fp_factor_squarefree(fp_from(p, q), q);
    // Mignotte-style coefficient bound for monic factors
    mpz_class height = 0;
    for (const auto& c : p.coeffs())
        if (abs(c) > height) height = abs(c);
    mpz_class bound = height * static_cast<unsigned long>(n + 1);
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    bound *= two_n;
    mpz_class pk = q;
    while (pk <= 2 * bound) pk *= static_cast<unsigned long>(q);
    std::vector<std::vector<mpz_class>> lifted;
    hensel_tree(p, factors, q, pk, lifted);

    const size_t r = lifted.size();
    if (r >= 26) throw std::logic_error("irreducibility: too many modular factors");
    for (uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
        if (2 * static_cast<size_t>(__builtin_popcount(mask)) > r) continue;
        int deg = 0;
        for (size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) deg += static_cast<int>(lifted[i].size()) - 1;
        if (!possible.count(deg)) continue;
        // candidate = prod of the chosen lifted factors mod p^k, balanced
        std::vector<mpz_class> cand{1};
        for (size_t i = 0; i < r; ++i) {
            if (!(mask & (1u << i))) continue;
            std::vector<mpz_class> nxt(cand.size() + lifted[i].size() - 1, 0);
            for (size_t a = 0; a < cand.size(); ++a)
                for (size_t b = 0; b < lifted[i].size(); ++b) {
                    nxt[a + b] += cand[a] * lifted[i][b];
                    nxt[a + b] %= pk;
                }
            cand = std::move(nxt);
        }
        for (auto& c : cand) {
            if (c < 0) c += pk;
            if (2 * c > pk) c -= pk;
        }
        IntPoly candidate{std::move(cand)};
        if (candidate.degree() == deg && p.divides(candidate))
            return {false, IrreducibilityMethod::Zassenhaus};
    }
    return {true, IrreducibilityMethod::Zassenhaus};
}

}  // namespace cmf::verify
