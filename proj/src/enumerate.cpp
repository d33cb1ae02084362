#include "cmfields/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace cmf::enumerate {

using chars::DirichletCharacter;
using fields::AbelianFieldSpec;

// ---------------------------------------------------------------- ExactBound

ExactBound ExactBound::from_integer(mpz_class v) {
    ExactBound b;
    b.integer_ = std::move(v);
    return b;
}

ExactBound ExactBound::power_of_ten(uint64_t num, uint64_t den) {
    if (den == 0) throw std::invalid_argument("bound: zero denominator");
    ExactBound b;
    b.pow_num_ = num;
    b.pow_den_ = den;
    mpz_ui_pow_ui(b.ten_pow_.get_mpz_t(), 10, num);
    return b;
}

ExactBound ExactBound::unbounded() {
    ExactBound b;
    b.unbounded_ = true;
    return b;
}

ExactBound ExactBound::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("bound: empty");
    if (text.rfind("10^", 0) == 0) {
        auto rest = text.substr(3);
        auto slash = rest.find('/');
        uint64_t num = std::stoull(rest.substr(0, slash));
        uint64_t den = slash == std::string::npos ? 1 : std::stoull(rest.substr(slash + 1));
        return power_of_ten(num, den);
    }
    auto e = text.find('e');
    if (e != std::string::npos) {
        mpz_class mant(text.substr(0, e));
        uint64_t k = std::stoull(text.substr(e + 1));
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
        return from_integer(mant * p);
    }
    return from_integer(mpz_class(text));
}

bool ExactBound::admits(const mpz_class& v) const {
    if (unbounded_) return true;
    if (integer_) return v <= *integer_;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(pow_den_));
    return p <= ten_pow_;
}

bool ExactBound::at_boundary(const mpz_class& v) const {
    if (unbounded_) return false;
    if (integer_) return v == *integer_;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(pow_den_));
    return p == ten_pow_;
}

mpz_class ExactBound::ceiling() const {
    if (unbounded_) throw std::logic_error("bound: unbounded has no ceiling");
    if (integer_) return *integer_;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), ten_pow_.get_mpz_t(),
                         static_cast<unsigned long>(pow_den_));
    if (!exact) r += 1;
    return r;
}

std::string ExactBound::str() const {
    if (unbounded_) return "unbounded";
    if (integer_) return integer_->get_str();
    std::string s = "10^" + std::to_string(pow_num_);
    if (pow_den_ != 1) s += "/" + std::to_string(pow_den_);
    return s;
}

// ----------------------------------------------------- conductor structure

namespace {

struct TorsionBlock {
    uint64_t prime;
    int prime_exp;           // a with p^a || f
    uint64_t prime_pow;      // p^a
    uint64_t full_order;     // order of the canonical generator of the block
    uint64_t torsion;        // gcd(n, full_order): order inside the n-torsion
    bool sign_block = false; // generated by -1 (or 3 mod 4)
    bool five_block = false;
};

// local conductor of the block component with torsion coordinate x
uint64_t local_conductor(const TorsionBlock& b, uint64_t x) {
    if (x == 0) return 1;
    if (b.sign_block) return 4;
    uint64_t e = x * (b.full_order / b.torsion);
    uint64_t o = b.full_order / arith::gcd(b.full_order, e);
    if (b.five_block) return 4 * o;
    uint64_t c = b.prime;
    while (o % b.prime == 0) o /= b.prime, c *= b.prime;
    return c;
}

struct ConductorContext {
    uint64_t f = 1;
    uint64_t exponent = 1;  // n = lcm of the shape
    std::vector<TorsionBlock> blocks;
    bool viable = false;

    ConductorContext(uint64_t f_, uint64_t n, const arith::Factorization& fac) {
        f = f_;
        exponent = n;
        for (auto [p, a] : fac.factors) {
            uint64_t pe = 1;
            for (int i = 0; i < a; ++i) pe *= p;
            if (p == 2) {
                if (a == 1) return;  // conductor cannot be 2 mod 4
                if (a == 2) {
                    blocks.push_back({2, a, pe, 2, arith::gcd(n, uint64_t{2}), true, false});
                } else {
                    // reach p^a requires 2^(a-2) | n
                    uint64_t five_order = pe / 4;
                    if (n % five_order != 0) return;
                    blocks.push_back({2, a, pe, 2, arith::gcd(n, uint64_t{2}), true, false});
                    blocks.push_back({2, a, pe, five_order, arith::gcd(n, five_order), false, true});
                }
            } else {
                uint64_t phi = pe / p * (p - 1);
                uint64_t t = arith::gcd(n, phi);
                // some torsion character must have conductor exactly p^a
                uint64_t ppart = 1;
                uint64_t tt = t;
                while (tt % p == 0) tt /= p, ppart *= p;
                uint64_t need = 1;
                for (int i = 0; i < a - 1; ++i) need *= p;
                if (ppart != need || t == 1) return;
                blocks.push_back({p, a, pe, phi, t, false, false});
            }
        }
        viable = true;
    }
};

struct Element {
    std::vector<uint8_t> coords;  // coords[i] < blocks[i].torsion
    uint64_t conductor = 1;
    uint64_t order = 1;
    bool odd = false;
};

// lcm-conductor of a character set: odd blocks multiply their best local
// conductor, the 2-part contributes the max over its (up to two) blocks
uint64_t conductor_of_set(const ConductorContext& ctx,
                          const std::vector<const Element*>& elems) {
    uint64_t cond = 1, two_part = 1;
    for (size_t i = 0; i < ctx.blocks.size(); ++i) {
        uint64_t best = 1;
        for (auto* e : elems)
            best = std::max(best, local_conductor(ctx.blocks[i], e->coords[i]));
        if (ctx.blocks[i].prime == 2)
            two_part = std::max(two_part, best);
        else
            cond *= best;
    }
    return cond * two_part;
}

}  // namespace

uint64_t conductor_search_bound(const std::vector<uint64_t>& shape, const ExactBound& bound) {
    if (bound.is_unbounded())
        throw std::invalid_argument("conductor_search_bound: bound must be finite");
    uint64_t d = 1, n = 1;
    for (auto s : shape) d *= s, n = std::lcm(n, s);
    // every character conductor f satisfies f * rad(f)^(d/2 - 1) <= B and
    // f / rad(f) <= E = 2^(v2(n)+1) * prod_{odd p | n} p^(vp(n))
    uint64_t m = d / 2 >= 1 ? d / 2 - 1 : 0;
    uint64_t E = 1;
    uint64_t nn = n;
    int v2 = 0;
    while (nn % 2 == 0) nn /= 2, ++v2;
    for (int i = 0; i < v2 + 1; ++i) E *= 2;
    for (auto [p, e] : arith::factor(nn).factors)
        for (int i = 0; i < e; ++i) E *= p;
    // F = floor((B * E^m)^(1/(m+1)))
    mpz_class acc = bound.ceiling();
    mpz_class Em;
    mpz_ui_pow_ui(Em.get_mpz_t(), static_cast<unsigned long>(E), static_cast<unsigned long>(m));
    acc *= Em;
    mpz_class root;
    mpz_root(root.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m + 1));
    if (!root.fits_ulong_p()) return std::numeric_limits<uint64_t>::max();
    return root.get_ui();
}

namespace {

struct Workspace {
    const EnumerationRequest& req;
    uint64_t degree;
    uint64_t exponent;
    std::vector<FieldRecord> found;

    explicit Workspace(const EnumerationRequest& r) : req(r) {
        degree = 1;
        exponent = 1;
        for (auto s : r.shape) degree *= s, exponent = std::lcm(exponent, s);
    }
};

// ascending-generator subgroup walk at a fixed conductor
class SubgroupWalker {
  public:
    SubgroupWalker(const ConductorContext& ctx, const EnumerationRequest& req,
                   uint64_t degree, std::vector<FieldRecord>& out)
        : ctx_(ctx), req_(req), degree_(degree), out_(out) {
        build_elements();
    }

    bool viable() const { return !elements_.empty(); }

    void run() {
        std::vector<uint32_t> H{0};  // indices into elements_, sorted
        recurse(H, mpz_class(1), 0);
    }

  private:
    const ConductorContext& ctx_;
    const EnumerationRequest& req_;
    uint64_t degree_;
    std::vector<FieldRecord>& out_;
    std::vector<Element> elements_;      // sorted by (conductor, coords)
    std::vector<uint32_t> strides_;      // mixed-radix rank of a coords tuple
    std::vector<uint32_t> index_of_;     // rank -> index into elements_

    void build_elements() {
        size_t k = ctx_.blocks.size();
        uint64_t total = 1;
        for (auto& b : ctx_.blocks) {
            total *= b.torsion;
            if (total > (1u << 22)) throw ResourceError("torsion group too large");
        }
        std::vector<uint8_t> coords(k, 0);
        elements_.reserve(total);
        while (true) {
            Element e;
            e.coords = coords;
            e.order = 1;
            uint64_t two_part = 1;
            for (size_t i = 0; i < k; ++i) {
                const auto& b = ctx_.blocks[i];
                uint64_t t = b.torsion;
                uint64_t x = coords[i];
                if (x) e.order = std::lcm(e.order, t / arith::gcd(t, x));
                uint64_t lc = local_conductor(b, x);
                if (b.prime == 2)
                    two_part = std::max(two_part, lc);
                else
                    e.conductor *= lc;
                if (b.sign_block) {
                    e.odd ^= (x & 1);
                } else if (!b.five_block) {
                    uint64_t full_e = x * (b.full_order / b.torsion);
                    e.odd ^= (full_e & 1);
                }
            }
            e.conductor *= two_part;
            elements_.push_back(std::move(e));
            size_t i = 0;
            for (; i < k; ++i) {
                if (++coords[i] < ctx_.blocks[i].torsion) break;
                coords[i] = 0;
            }
            if (i == k) break;
        }
        std::sort(elements_.begin(), elements_.end(), [](const Element& a, const Element& b) {
            if (a.conductor != b.conductor) return a.conductor < b.conductor;
            return a.coords < b.coords;
        });
        strides_.assign(k, 1);
        for (size_t i = 1; i < k; ++i)
            strides_[i] = strides_[i - 1] * static_cast<uint32_t>(ctx_.blocks[i - 1].torsion);
        index_of_.assign(total, 0);
        for (uint32_t i = 0; i < elements_.size(); ++i)
            index_of_[rank_of(elements_[i].coords)] = i;
    }

    uint32_t rank_of(const std::vector<uint8_t>& coords) const {
        uint32_t r = 0;
        for (size_t i = 0; i < coords.size(); ++i) r += strides_[i] * coords[i];
        return r;
    }

    std::vector<uint8_t> add(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) const {
        std::vector<uint8_t> c(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            c[i] = static_cast<uint8_t>((a[i] + b[i]) % ctx_.blocks[i].torsion);
        return c;
    }

    // extend H by generator g (index), returning the closed subgroup's
    // indices or nullopt when the disc budget is exceeded
    std::optional<std::pair<std::vector<uint32_t>, mpz_class>> extend(
        const std::vector<uint32_t>& H, mpz_class disc, uint32_t g) const {
        std::vector<uint32_t> result(H);
        // cosets H, H+g, H+2g, ... until g*j falls into H
        std::vector<uint8_t> shift = elements_[g].coords;
        std::vector<uint8_t> cur = shift;
        while (true) {
            uint32_t ci = index_of_[rank_of(cur)];
            if (std::binary_search(H.begin(), H.end(), ci)) break;
            for (uint32_t h : H) {
                auto sum = add(elements_[h].coords, cur);
                uint32_t si = index_of_[rank_of(sum)];
                result.push_back(si);
                disc *= static_cast<unsigned long>(elements_[si].conductor);
            }
            if (!req_.disc_bound.admits(disc)) return std::nullopt;  // only grows
            cur = add(cur, shift);
        }
        std::sort(result.begin(), result.end());
        return std::make_pair(std::move(result), std::move(disc));
    }

    bool type_embeds(const std::vector<uint32_t>& H) const {
        std::vector<uint64_t> orders;
        orders.reserve(H.size());
        for (auto i : H) orders.push_back(elements_[i].order);
        auto inv = fields::invariant_factors_from_orders(orders);
        if (inv.size() > req_.shape.size()) return false;
        // largest-to-largest divisibility
        for (size_t j = 0; j < inv.size(); ++j) {
            uint64_t mine = inv[inv.size() - 1 - j];
            uint64_t target = req_.shape[req_.shape.size() - 1 - j];
            if (target % mine != 0) return false;
        }
        return true;
    }

    // conductor-discriminant across the tower H <= X gives
    // disc(X) >= disc(H)^{[X:H]}; partial subgroups failing that are dead
    bool tower_admits(const mpz_class& disc, uint64_t size) const {
        if (req_.disc_bound.is_unbounded()) return true;
        mpz_class powed;
        mpz_pow_ui(powed.get_mpz_t(), disc.get_mpz_t(),
                   static_cast<unsigned long>(degree_ / size));
        return req_.disc_bound.admits(powed);
    }

    void recurse(const std::vector<uint32_t>& H, const mpz_class& disc, uint32_t next_index) {
        if (H.size() == degree_) {
            finalize(H, disc);
            return;
        }
        for (uint32_t g = std::max<uint32_t>(next_index, 1); g < elements_.size(); ++g) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            mpz_class budget_probe = disc * static_cast<unsigned long>(elements_[g].conductor);
            if (!req_.disc_bound.admits(budget_probe)) break;  // sorted by conductor
            auto ext = extend(H, disc, g);
            if (!ext) continue;
            auto& [K, kdisc] = *ext;
            if (K.size() > degree_ || degree_ % K.size() != 0) continue;
            // canonical chain: g must be the least new element
            auto diff_min = [&] {
                for (uint32_t idx : K)
                    if (!std::binary_search(H.begin(), H.end(), idx)) return idx;
                return g;
            }();
            if (diff_min != g) continue;
            if (!type_embeds(K)) continue;
            if (!tower_admits(kdisc, K.size())) continue;
            recurse(K, kdisc, g + 1);
        }
    }

    void finalize(const std::vector<uint32_t>& H, const mpz_class& disc) {
        // exact lcm-conductor check: every block must reach its cap
        std::vector<const Element*> ptrs;
        ptrs.reserve(H.size());
        for (auto i : H) ptrs.push_back(&elements_[i]);
        if (conductor_of_set(ctx_, ptrs) != ctx_.f) return;
        // exact shape check
        std::vector<uint64_t> orders;
        for (auto i : H) orders.push_back(elements_[i].order);
        if (fields::invariant_factors_from_orders(orders) != req_.shape) return;
        bool any_odd = false;
        for (auto* e : ptrs) any_odd |= e->odd;
        if (req_.signature == SignatureFilter::TotallyReal && any_odd) return;
        if (req_.signature == SignatureFilter::CmOnly && !any_odd) return;

        // build the primitive characters
        std::vector<DirichletCharacter> X;
        X.reserve(H.size());
        for (auto* e : ptrs) X.push_back(character_of(*e));
        FieldRecord rec;
        rec.spec = AbelianFieldSpec::from_generators(X);
        if (rec.spec.conductor() != ctx_.f || rec.spec.degree() != degree_ ||
            rec.spec.discriminant_magnitude() != disc)
            throw std::logic_error("enumerate: character reconstruction mismatch");
        rec.at_boundary = req_.disc_bound.at_boundary(disc);
        out_.push_back(std::move(rec));
    }

    // primitive character attached to a torsion element, built block-locally
    DirichletCharacter character_of(const Element& e) const;
};

DirichletCharacter SubgroupWalker::character_of(const Element& e) const {
    // assemble the exponent vector on the unit-group generators of the
    // character's own conductor
    uint64_t cond = e.conductor;
    struct LocalPart {
        uint64_t prime;
        uint64_t cond_pow;     // p^a' dividing cond
        uint64_t exp_on_gen;   // exponent on the canonical generator
        bool five = false;
        bool sign = false;
    };
    std::vector<LocalPart> parts;
    for (size_t i = 0; i < ctx_.blocks.size(); ++i) {
        const auto& b = ctx_.blocks[i];
        uint64_t x = e.coords[i];
        if (x == 0) continue;
        uint64_t lc = local_conductor(b, x);
        uint64_t full_e = x * (b.full_order / b.torsion);
        if (b.sign_block) {
            parts.push_back({2, 4, full_e & 1, false, true});
        } else if (b.five_block) {
            // chi(5) = zeta_{2^(a-2)}^full_e; on the conductor 2^{a'} the
            // exponent divides down exactly
            uint64_t target_order = lc / 4;  // order of 5 mod 2^{a'}
            uint64_t reduced = full_e / (b.full_order / target_order);
            parts.push_back({2, lc, reduced, true, false});
        } else if (lc == b.prime_pow) {
            parts.push_back({b.prime, lc, full_e, false, false});
        } else {
            // odd p with a dropped exponent: express on the smaller canonical
            // generator via a discrete log (rare: only p | n with p^2 | f)
            uint64_t gbig = arith::primitive_root(b.prime, b.prime_exp) % b.prime_pow;
            uint64_t asmall = 0;
            uint64_t t = lc;
            while (t % b.prime == 0) t /= b.prime, ++asmall;
            uint64_t gsmall = arith::primitive_root(b.prime, static_cast<int>(asmall));
            // dlog of gsmall (as a unit mod p^a via any lift) base gbig
            uint64_t phi_big = b.full_order;
            uint64_t dl = 0;
            uint64_t acc = 1;
            for (dl = 0; dl < phi_big; ++dl) {
                if (acc == gsmall % b.prime_pow) break;
                acc = arith::mul_mod(acc, gbig, b.prime_pow);
            }
            uint64_t phi_small = lc / b.prime * (b.prime - 1);
            // value exponent at gsmall relative zeta_{phi_big}: full_e * dl
            unsigned __int128 v = static_cast<unsigned __int128>(full_e) * (dl % phi_big) % phi_big;
            // rescale to the phi_small basis
            uint64_t exp_small = static_cast<uint64_t>(v * phi_small / phi_big % phi_small);
            parts.push_back({b.prime, lc, exp_small, false, false});
        }
    }
    // order parts like unit_group(cond): 2-part first (sign then five), odd
    // primes ascending
    std::sort(parts.begin(), parts.end(), [](const LocalPart& a, const LocalPart& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        return a.sign && !b.sign;
    });
    std::vector<uint64_t> exps;
    uint64_t two_pow = 1;
    for (auto& p : parts)
        if (p.prime == 2) two_pow = std::max(two_pow, p.cond_pow);
    if (two_pow >= 8) {
        // blocks {-1, 5}
        uint64_t se = 0, fe = 0;
        for (auto& p : parts) {
            if (p.sign) se = p.exp_on_gen;
            if (p.five) fe = p.exp_on_gen;
        }
        exps.push_back(se);
        exps.push_back(fe);
    } else if (two_pow == 4) {
        uint64_t se = 0;
        for (auto& p : parts)
            if (p.sign) se = p.exp_on_gen;
        exps.push_back(se);
    }
    for (auto& p : parts)
        if (p.prime != 2) exps.push_back(p.exp_on_gen);
    auto chi = DirichletCharacter::from_exponents(cond, exps);
    if (chi.conductor() != cond)
        throw std::logic_error("enumerate: character conductor mismatch");
    return chi;
}

void process_conductor(uint64_t f, Workspace& ws) {
    if (f < 3) return;
    auto fac = arith::factor(f);
    // per-prime exponent caps from the shape exponent
    uint64_t n = ws.exponent;
    for (auto [p, a] : fac.factors) {
        uint64_t cap;
        if (p == 2) {
            int v2 = 0;
            uint64_t t = n;
            while (t % 2 == 0) t /= 2, ++v2;
            cap = static_cast<uint64_t>(v2 + 2);
        } else {
            int vp = 0;
            uint64_t t = n;
            while (t % p == 0) t /= p, ++vp;
            cap = static_cast<uint64_t>(vp + 1);
        }
        if (static_cast<uint64_t>(a) > cap) return;
    }
    // a-priori discriminant floor: at least d/2 characters are ramified at
    // each p | f and one reaches p^a, so v_p(disc) >= d/2 - 1 + a; at p = 2
    // every ramified character has conductor divisible by 4, giving
    // v_2(disc) >= d + a - 2
    if (!ws.req.disc_bound.is_unbounded()) {
        mpz_class floor_disc = 1;
        for (auto [p, a] : fac.factors) {
            uint64_t e = p == 2 ? ws.degree + static_cast<uint64_t>(a) - 2
                                : ws.degree / 2 - 1 + static_cast<uint64_t>(a);
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(e));
            floor_disc *= pe;
        }
        if (!ws.req.disc_bound.admits(floor_disc)) return;
    }
    ConductorContext ctx(f, n, fac);
    if (!ctx.viable) return;
    // Lagrange: the torsion group must contain a subgroup of the right order
    uint64_t tsize = 1;
    for (auto& b : ctx.blocks) tsize *= b.torsion;
    if (tsize % ws.degree != 0) return;
    SubgroupWalker walker(ctx, ws.req, ws.degree, ws.found);
    walker.run();
}

}  // namespace

EnumerationReport enumerate_abelian(const EnumerationRequest& req) {
    // validate the shape
    if (req.shape.empty()) throw std::invalid_argument("enumerate: empty shape");
    uint64_t degree = 1;
    for (size_t i = 0; i < req.shape.size(); ++i) {
        if (req.shape[i] < 2) throw std::invalid_argument("enumerate: shape entries must be >= 2");
        if (i + 1 < req.shape.size() && req.shape[i + 1] % req.shape[i] != 0)
            throw std::invalid_argument("enumerate: shape entries must divide the next");
        degree *= req.shape[i];
    }
    if (degree > 64) throw ResourceError("enumerate: degree above 64");
    if (degree % 2 == 1 && req.signature != SignatureFilter::TotallyReal)
        throw std::invalid_argument("enumerate: odd-degree shapes are totally real only");

    uint64_t F;
    if (req.disc_bound.is_unbounded()) {
        if (req.max_conductor == 0)
            throw std::invalid_argument("enumerate: need a discriminant bound or a conductor cap");
        F = req.max_conductor;
    } else {
        F = conductor_search_bound(req.shape, req.disc_bound);
        if (req.max_conductor) F = std::min(F, req.max_conductor);
    }
    if (F > req.conductor_ceiling)
        throw ResourceError("enumerate: conductor search bound " + std::to_string(F) +
                            " above the ceiling " + std::to_string(req.conductor_ceiling));

    // parallel over conductor stripes, deterministic merge
    unsigned nthreads = req.threads > 0 ? static_cast<unsigned>(req.threads) : 1;
    std::vector<std::vector<FieldRecord>> partial(nthreads);
    auto work = [&](unsigned tid) {
        Workspace ws(req);
        for (uint64_t f = 3 + tid; f <= F; f += nthreads) process_conductor(f, ws);
        partial[tid] = std::move(ws.found);
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
    std::vector<FieldRecord> all;
    for (auto& p : partial)
        for (auto& r : p) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const FieldRecord& a, const FieldRecord& b) {
        if (a.spec.discriminant_magnitude() != b.spec.discriminant_magnitude())
            return a.spec.discriminant_magnitude() < b.spec.discriminant_magnitude();
        if (a.spec.conductor() != b.spec.conductor())
            return a.spec.conductor() < b.spec.conductor();
        return a.spec.characters() < b.spec.characters();
    });

    // classification, h^- and sieve verdicts
    EnumerationReport rep;
    for (auto& rec : all) {
        if (!rec.spec.totally_real()) {
            auto cls = fields::classify_cm(rec.spec);
            rec.hminus = hminus::relative_class_number(*cls.cm);
            if (req.sieve == SieveMode::RelativeClassNumberOne)
                rec.verdict = groups::witness_prune(*rec.hminus, false);
        }
        rep.fields.push_back(std::move(rec));
    }
    rep.total_found = rep.fields.size();
    for (auto& r : rep.fields) {
        if (r.hminus) ++rep.cm_count;
        if (r.verdict.prune) ++rep.pruned_count;
        if (r.verdict.ambiguous) ++rep.ambiguous_count;
        if (r.at_boundary) ++rep.boundary_count;
    }
    rep.useful_count = rep.total_found - rep.pruned_count;
    return rep;
}

EnumerationReport sieve_pass(std::vector<FieldRecord> fields) {
    EnumerationReport rep;
    for (auto& rec : fields) {
        if (rec.hminus) rec.verdict = groups::witness_prune(*rec.hminus, false);
        rep.fields.push_back(std::move(rec));
    }
    rep.total_found = rep.fields.size();
    for (auto& r : rep.fields) {
        if (r.hminus) ++rep.cm_count;
        if (r.verdict.prune) ++rep.pruned_count;
        if (r.verdict.ambiguous) ++rep.ambiguous_count;
        if (r.at_boundary) ++rep.boundary_count;
    }
    rep.useful_count = rep.total_found - rep.pruned_count;
    return rep;
}

}  // namespace cmf::enumerate
