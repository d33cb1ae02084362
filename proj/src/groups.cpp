#include "cmfields/groups.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "cmfields/data_files.hpp"

namespace cmf::groups {

FiniteGroup::FiniteGroup(GroupId id, std::string name,
                         std::vector<std::vector<std::uint16_t>> table)
    : id_(id), name_(std::move(name)), table_(std::move(table)) {
    const size_t n = table_.size();
    if (n == 0 || n > 96)
        throw std::invalid_argument("group " + name_ + ": order must be in [1, 96]");
    for (const auto& row : table_)
        if (row.size() != n) throw std::invalid_argument("group " + name_ + ": ragged table");
    for (size_t i = 0; i < n; ++i)
        if (table_[0][i] != i || table_[i][0] != i)
            throw std::invalid_argument("group " + name_ + ": element 0 is not the identity");
    inverse_.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool found = false;
        for (size_t j = 0; j < n; ++j) {
            if (table_[i][j] >= n) throw std::invalid_argument("group " + name_ + ": bad index");
            if (table_[i][j] == 0) {
                if (table_[j][i] != 0)
                    throw std::invalid_argument("group " + name_ + ": one-sided inverse");
                inverse_[i] = static_cast<std::uint16_t>(j);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("group " + name_ + ": missing inverse");
    }
    // full associativity check; order <= 96 keeps this below 10^6 products
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group " + name_ + ": not associative");
}

std::uint64_t FiniteGroup::element_order(std::uint16_t a) const {
    std::uint64_t k = 1;
    std::uint16_t x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (size_t a = 0; a < order(); ++a)
        for (size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<std::uint16_t> FiniteGroup::center() const {
    std::vector<std::uint16_t> out;
    for (size_t a = 0; a < order(); ++a) {
        bool central = true;
        for (size_t b = 0; b < order() && central; ++b)
            central = table_[a][b] == table_[b][a];
        if (central) out.push_back(static_cast<std::uint16_t>(a));
    }
    return out;
}

std::vector<std::uint16_t> FiniteGroup::subgroup_closure(
    std::vector<std::uint16_t> gens) const {
    std::vector<bool> in(order(), false);
    in[0] = true;
    std::vector<std::uint16_t> members{0};
    std::vector<std::uint16_t> work = std::move(gens);
    while (!work.empty()) {
        std::uint16_t g = work.back();
        work.pop_back();
        if (in[g]) continue;
        in[g] = true;
        members.push_back(g);
        for (std::uint16_t m : std::vector<std::uint16_t>(members))
            for (std::uint16_t prod : {mul(m, g), mul(g, m), inverse(g)})
                if (!in[prod]) work.push_back(prod);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::uint16_t> FiniteGroup::derived_subgroup() const {
    std::vector<std::uint16_t> comms;
    for (size_t a = 0; a < order(); ++a)
        for (size_t b = 0; b < order(); ++b) {
            std::uint16_t c = mul(mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)),
                                  mul(inverse_[a], inverse_[b]));
            comms.push_back(c);
        }
    return subgroup_closure(std::move(comms));
}

bool FiniteGroup::is_normal(const std::vector<std::uint16_t>& subgroup) const {
    std::vector<bool> in(order(), false);
    for (auto s : subgroup) in[s] = true;
    for (size_t g = 0; g < order(); ++g)
        for (auto s : subgroup) {
            std::uint16_t conj = mul(mul(static_cast<std::uint16_t>(g), s), inverse_[g]);
            if (!in[conj]) return false;
        }
    return true;
}

std::vector<std::uint64_t> FiniteGroup::abelian_quotient_shape(
    const std::vector<std::uint16_t>& normal) const {
    if (!is_normal(normal)) throw std::invalid_argument("quotient: subgroup not normal");
    // coset labelling
    std::vector<int> coset_of(order(), -1);
    std::vector<std::uint16_t> reps;
    for (std::uint16_t g = 0; g < order(); ++g) {
        if (coset_of[g] >= 0) continue;
        int label = static_cast<int>(reps.size());
        for (auto s : normal) coset_of[mul(g, s)] = label;
        reps.push_back(g);
    }
    // quotient multiplication must be abelian for shape extraction
    std::vector<std::uint64_t> orders;
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = 0; j < reps.size(); ++j) {
            if (coset_of[mul(reps[i], reps[j])] != coset_of[mul(reps[j], reps[i])])
                throw std::invalid_argument("quotient: not abelian");
        }
        std::uint16_t x = reps[i];
        std::uint64_t k = 1;
        while (coset_of[x] != coset_of[0]) {
            x = mul(x, reps[i]);
            ++k;
        }
        orders.push_back(k);
    }
    return fields::invariant_factors_from_orders(orders);
}

std::vector<std::uint64_t> FiniteGroup::abelianization_shape() const {
    return abelian_quotient_shape(derived_subgroup());
}

std::vector<std::vector<std::uint16_t>> FiniteGroup::all_subgroups() const {
    std::set<std::vector<std::uint16_t>> seen;
    std::vector<std::vector<std::uint16_t>> frontier{{0}};
    seen.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint16_t>> next;
        for (const auto& H : frontier)
            for (std::uint16_t g = 1; g < order(); ++g) {
                if (std::binary_search(H.begin(), H.end(), g)) continue;
                auto gens = H;
                gens.push_back(g);
                auto K = subgroup_closure(std::move(gens));
                if (seen.insert(K).second) next.push_back(std::move(K));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::uint16_t>> FiniteGroup::normal_subgroups() const {
    std::vector<std::vector<std::uint16_t>> out;
    for (auto& H : all_subgroups())
        if (is_normal(H)) out.push_back(H);
    return out;
}

NormalSeries derived_series(const FiniteGroup& g) {
    std::vector<std::vector<std::uint16_t>> descending;
    std::vector<std::uint16_t> cur(g.order());
    for (size_t i = 0; i < g.order(); ++i) cur[i] = static_cast<std::uint16_t>(i);
    descending.push_back(cur);
    while (descending.back().size() > 1) {
        // derived subgroup of the subgroup spanned by `descending.back()`
        const auto& H = descending.back();
        std::vector<std::uint16_t> comms;
        for (auto a : H)
            for (auto b : H)
                comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
        auto D = g.subgroup_closure(std::move(comms));
        if (D.size() == H.size())
            throw std::invalid_argument("derived_series: group is not solvable");
        descending.push_back(std::move(D));
    }
    NormalSeries s;
    s.subgroups.assign(descending.rbegin(), descending.rend());
    for (size_t i = 0; i + 1 < s.subgroups.size(); ++i) {
        if (!g.is_normal(s.subgroups[i]))
            throw std::logic_error("derived_series: member not normal in G");
        // shape of G_{i+1}/G_i: compute within the subgroup G_{i+1}
        const auto& big = s.subgroups[i + 1];
        std::vector<bool> in_small(g.order(), false);
        for (auto x : s.subgroups[i]) in_small[x] = true;
        std::vector<int> coset_of(g.order(), -1);
        std::vector<std::uint16_t> reps;
        for (auto x : big) {
            if (coset_of[x] >= 0) continue;
            int label = static_cast<int>(reps.size());
            for (auto y : s.subgroups[i]) coset_of[g.mul(x, y)] = label;
            reps.push_back(x);
        }
        std::vector<std::uint64_t> orders;
        for (auto r : reps) {
            std::uint16_t x = r;
            std::uint64_t k = 1;
            while (coset_of[x] != coset_of[0]) {
                x = g.mul(x, r);
                ++k;
            }
            orders.push_back(k);
        }
        s.quotient_shapes.push_back(fields::invariant_factors_from_orders(orders));
    }
    return s;
}

std::map<GroupId, FiniteGroup> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group catalog: " + path.string());
    std::map<GroupId, FiniteGroup> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream head(line);
        std::string kw, name;
        std::uint64_t order, id;
        head >> kw >> order >> id >> name;
        if (kw != "group" || head.fail())
            throw std::runtime_error("catalog: malformed header: " + line);
        std::vector<std::vector<std::uint16_t>> table(order);
        for (std::uint64_t r = 0; r < order; ++r) {
            if (!std::getline(in, line))
                throw std::runtime_error("catalog: truncated table for " + name);
            std::istringstream row(line);
            std::uint64_t v;
            while (row >> v) table[r].push_back(static_cast<std::uint16_t>(v));
            if (table[r].size() != order)
                throw std::runtime_error("catalog: bad row length in " + name);
        }
        try {
            out.emplace(GroupId{order, id}, FiniteGroup({order, id}, name, std::move(table)));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("catalog entry (" + std::to_string(order) + "," +
                                     std::to_string(id) + "): " + e.what());
        }
    }
    return out;
}

const std::map<GroupId, FiniteGroup>& catalog() {
    static std::mutex mu;
    static std::map<GroupId, FiniteGroup> groups;
    std::scoped_lock lock(mu);
    if (groups.empty())
        groups = load_catalog(data::find_data_file("groups.catalog"));
    return groups;
}

CMAdmissible cm_admissible(const FiniteGroup& g) {
    CMAdmissible out;
    for (auto z : g.center())
        if (z != 0 && g.element_order(z) == 2) out.central_involutions.push_back(z);
    out.admissible = !out.central_involutions.empty();
    return out;
}

DegreeAdmissible degree_admissible(std::uint64_t d, bool abelian, bool relative_one_list) {
    if (d % 2 != 0 || d == 0)
        throw std::invalid_argument("degree_admissible: degree must be even");
    if (d > 216) throw std::invalid_argument("degree_admissible: degree above 216");
    DegreeAdmissible out;
    if (abelian) return out;
    if (d == 4 || d == 90) return {false, "d in {4, 90}"};
    std::uint64_t half = d / 2;
    if (half % 2 == 1) {
        if (arith::is_prime(half)) return {false, "d = 2p"};
        auto f = arith::factor(half);
        if (f.factors.size() == 1 && f.factors[0].second == 2)
            return {false, "d = 2p^2"};
    }
    if (relative_one_list && d <= 96) {
        static const std::uint64_t list[] = {8,  12, 16, 20, 24, 32, 36, 40, 48,
                                             54, 56, 60, 64, 72, 80, 84, 88, 96};
        if (!std::count(std::begin(list), std::end(list), d))
            return {false, "outside the relative class number one degree list"};
    }
    return out;
}

bool must_be_totally_real(const FiniteGroup& g, const std::vector<std::uint16_t>& normal) {
    if (!g.is_normal(normal)) throw std::invalid_argument("must_be_totally_real: not normal");
    auto adm = cm_admissible(g);
    if (adm.central_involutions.empty()) return true;  // no CM realization at all
    for (auto z : adm.central_involutions)
        if (!std::binary_search(normal.begin(), normal.end(), z)) return false;
    return true;
}

SieveVerdict witness_prune(const hminus::HMinusResult& h, bool odd_index) {
    using hminus::QIndex;
    auto fails = [&](const mpq_class& v) {
        if (odd_index) return v != 1;
        return v != 1 && v != 2 && v != 4;
    };
    SieveVerdict out;
    if (h.q_index != QIndex::Ambiguous) {
        out.prune = fails(h.value);
    } else {
        bool f1 = fails(h.value), f2 = fails(h.other_candidate());
        out.prune = f1 && f2;  // never prune a possible survivor
        out.ambiguous = f1 != f2;
    }
    if (out.prune)
        out.reason = odd_index ? SieveReason::OddIndexWitness
                               : SieveReason::RelativeClassNumberSet;
    return out;
}

}  // namespace cmf::groups
