#include "cmfields/fields.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>

namespace cmf::fields {

std::vector<uint64_t> invariant_factors_from_orders(std::span<const uint64_t> orders) {
    if (orders.size() <= 1) return {};
    uint64_t expo = 1;
    for (uint64_t o : orders) expo = std::lcm(expo, o);
    // Per prime, recover the lambda-partition of the p-Sylow subgroup from
    // the counts S_j = #{x : p-part of ord(x) divides p^j}; the ratio
    // S_j / S_{j-1} equals p^{#(i : lambda_i >= j)}.
    std::map<uint64_t, std::vector<int>> partitions;  // prime -> descending exponents
    for (auto [p, e] : arith::factor(expo).factors) {
        std::vector<uint64_t> counts;
        uint64_t pj = 1;
        for (int j = 0; j <= e; ++j) {
            uint64_t cnt = 0;
            for (uint64_t o : orders) {
                uint64_t op = o;
                while (op % p == 0) op /= p;
                if (o / op <= pj) ++cnt;
            }
            counts.push_back(cnt);
            pj *= p;
        }
        std::vector<int> conj;  // conj[j-1] = #{i : lambda_i >= j}
        for (size_t j = 1; j < counts.size(); ++j) {
            uint64_t ratio = counts[j] / counts[j - 1];
            int k = 0;
            while (ratio > 1) ratio /= p, ++k;
            conj.push_back(k);
        }
        std::vector<int> lambda;
        for (int j = static_cast<int>(conj.size()); j >= 1; --j) {
            int upper = conj[j - 1];
            int lower = j == static_cast<int>(conj.size()) ? 0 : conj[j];
            for (int c = lower; c < upper; ++c) lambda.push_back(j);
        }
        std::sort(lambda.rbegin(), lambda.rend());
        partitions[p] = lambda;
    }
    size_t k = 0;
    for (auto& [p, lambda] : partitions) k = std::max(k, lambda.size());
    std::vector<uint64_t> inv(k, 1);
    for (auto& [p, lambda] : partitions)
        for (size_t i = 0; i < lambda.size(); ++i) {
            uint64_t q = 1;
            for (int j = 0; j < lambda[i]; ++j) q *= p;
            inv[i] *= q;  // inv[0] pairs the largest factors
        }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

AbelianFieldSpec AbelianFieldSpec::from_generators(
    std::span<const DirichletCharacter> gens) {
    if (gens.empty()) throw std::invalid_argument("field: need at least one generator");
    std::set<DirichletCharacter> X{DirichletCharacter::trivial()};
    std::vector<DirichletCharacter> work(gens.begin(), gens.end());
    while (!work.empty()) {
        auto c = work.back();
        work.pop_back();
        if (X.count(c)) continue;
        X.insert(c);
        std::vector<DirichletCharacter> cur(X.begin(), X.end());
        for (const auto& x : cur) work.push_back(x * c);
    }
    AbelianFieldSpec spec;
    spec.X_.assign(X.begin(), X.end());
    spec.conductor_ = 1;
    spec.disc_ = 1;
    spec.totally_real_ = true;
    std::vector<uint64_t> orders;
    for (const auto& chi : spec.X_) {
        spec.conductor_ = std::lcm(spec.conductor_, chi.conductor());
        spec.disc_ *= chi.conductor();
        if (chi.is_odd()) spec.totally_real_ = false;
        orders.push_back(chi.order());
    }
    spec.shape_ = invariant_factors_from_orders(orders);
    return spec;
}

CMClassification classify_cm(const AbelianFieldSpec& field) {
    CMClassification out;
    if (field.totally_real()) return out;
    out.is_cm = true;
    std::vector<DirichletCharacter> even;
    for (const auto& chi : field.characters())
        if (!chi.is_odd()) even.push_back(chi);
    CMStructure cm;
    cm.field = field;
    cm.real_subfield = AbelianFieldSpec::from_generators(even);
    cm.w = roots_of_unity_order(field);
    out.cm = std::move(cm);
    return out;
}

uint64_t roots_of_unity_order(const AbelianFieldSpec& field) {
    auto contains_full_group = [&](uint64_t q) {
        const auto& X = field.characters();
        for (const auto& chi : chars::all_characters(q))
            if (!std::binary_search(X.begin(), X.end(), chi)) return false;
        return true;
    };
    uint64_t n = 1;
    std::vector<uint64_t> primes{2};
    for (auto [p, e] : arith::factor(field.conductor()).factors)
        if (p != 2) primes.push_back(p);
    for (uint64_t p : primes) {
        uint64_t q = p, best = 1;
        while (arith::euler_phi(q) <= field.degree()) {
            if (contains_full_group(q)) best = q;
            q *= p;
        }
        n *= best;
    }
    return n % 2 == 0 ? n : 2 * n;
}

std::vector<SubfieldInfo> subfield_specs(const AbelianFieldSpec& field) {
    const auto& X = field.characters();
    // all subgroups by closure of generating subsets, grown one element at a time
    std::set<std::vector<DirichletCharacter>> subgroups;
    std::vector<DirichletCharacter> trivial{DirichletCharacter::trivial()};
    subgroups.insert(trivial);
    std::vector<std::vector<DirichletCharacter>> frontier{trivial};
    while (!frontier.empty()) {
        std::vector<std::vector<DirichletCharacter>> next;
        for (const auto& H : frontier) {
            for (const auto& g : X) {
                if (std::binary_search(H.begin(), H.end(), g)) continue;
                std::set<DirichletCharacter> closure(H.begin(), H.end());
                std::vector<DirichletCharacter> queue{g};
                while (!queue.empty()) {
                    auto c = queue.back();
                    queue.pop_back();
                    if (closure.count(c)) continue;
                    closure.insert(c);
                    std::vector<DirichletCharacter> cur(closure.begin(), closure.end());
                    for (const auto& x : cur) queue.push_back(x * c);
                }
                std::vector<DirichletCharacter> key(closure.begin(), closure.end());
                if (subgroups.insert(key).second) next.push_back(std::move(key));
            }
        }
        frontier = std::move(next);
    }
    std::vector<SubfieldInfo> out;
    for (const auto& H : subgroups) {
        SubfieldInfo info;
        std::vector<DirichletCharacter> gens(H.begin(), H.end());
        info.spec = AbelianFieldSpec::from_generators(gens);
        info.index = field.degree() / info.spec.degree();
        info.is_cm = !info.spec.totally_real();
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const SubfieldInfo& a, const SubfieldInfo& b) {
        if (a.spec.degree() != b.spec.degree()) return a.spec.degree() < b.spec.degree();
        return a.spec.characters() < b.spec.characters();
    });
    return out;
}

}  // namespace cmf::fields
