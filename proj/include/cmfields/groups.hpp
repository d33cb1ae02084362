#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cmfields/hminus.hpp"

namespace cmf::groups {

using GroupId = std::pair<std::uint64_t, std::uint64_t>;  // (order, catalog index)

/// Finite group as a full multiplication table; element 0 is the identity.
class FiniteGroup {
  public:
    FiniteGroup(GroupId id, std::string name, std::vector<std::vector<std::uint16_t>> table);

    std::uint64_t order() const { return table_.size(); }
    GroupId id() const { return id_; }
    const std::string& name() const { return name_; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a][b]; }
    std::uint16_t inverse(std::uint16_t a) const { return inverse_[a]; }
    std::uint64_t element_order(std::uint16_t a) const;

    bool is_abelian() const;
    std::vector<std::uint16_t> center() const;
    std::vector<std::uint16_t> derived_subgroup() const;
    /// Closure of a subset under multiplication and inverses.
    std::vector<std::uint16_t> subgroup_closure(std::vector<std::uint16_t> gens) const;
    bool is_normal(const std::vector<std::uint16_t>& subgroup) const;
    /// Invariant factors of the quotient G/N (N normal, quotient abelian).
    std::vector<std::uint64_t> abelian_quotient_shape(
        const std::vector<std::uint16_t>& normal) const;
    std::vector<std::uint64_t> abelianization_shape() const;
    /// All subgroups (by closure growth); sorted element lists.
    std::vector<std::vector<std::uint16_t>> all_subgroups() const;
    std::vector<std::vector<std::uint16_t>> normal_subgroups() const;

  private:
    GroupId id_;
    std::string name_;
    std::vector<std::vector<std::uint16_t>> table_;
    std::vector<std::uint16_t> inverse_;
};

/// Ascending chain 1 = G_0 < ... < G_l = G, every member normal in G with
/// abelian quotients G_{i+1}/G_i.
struct NormalSeries {
    std::vector<std::vector<std::uint16_t>> subgroups;
    std::vector<std::vector<std::uint64_t>> quotient_shapes;
};

/// Derived series (refined bottom-up), abelian quotient shapes attached.
/// Throws if the derived series does not reach the trivial group.
NormalSeries derived_series(const FiniteGroup& g);

/// Parse the bundled catalog; validates the group axioms of every entry.
std::map<GroupId, FiniteGroup> load_catalog(const std::filesystem::path& path);
/// Uses the data-file search path.
const std::map<GroupId, FiniteGroup>& catalog();

struct CMAdmissible {
    bool admissible = false;
    std::vector<std::uint16_t> central_involutions;
};

/// A group can be the Galois group of a CM field iff its center has even
/// order; lists the candidate complex conjugations.
CMAdmissible cm_admissible(const FiniteGroup& g);

struct DegreeAdmissible {
    bool admissible = true;
    std::string reason;  // set when excluded
};

/// Non-abelian degree exclusions (d in {4, 90}, d = 2p, d = 2p^2); with
/// `relative_one_list` also restricts to the published admissible list for
/// the relative class number one problem (d <= 96).
DegreeAdmissible degree_admissible(std::uint64_t d, bool abelian,
                                   bool relative_one_list = false);

/// True iff every central involution of G lies in N: the fixed field of N
/// in any CM realization must then be totally real.
bool must_be_totally_real(const FiniteGroup& g, const std::vector<std::uint16_t>& normal);

enum class SieveReason {
    Keep,
    OddIndexWitness,        // h^- != 1 with odd subfield index
    RelativeClassNumberSet, // h^- outside {1, 2, 4}
    TotallyRealRequired,    // ramification constraint at infinity
    DegreeExcluded,
    BoundExceeded,
};

struct SieveVerdict {
    bool prune = false;
    SieveReason reason = SieveReason::Keep;
    bool ambiguous = false;  // verdict differs between the two Q candidates
};

/// Witness pruning for a CM subfield of a candidate tower with target
/// relative class number one.  Conservative under an ambiguous Hasse index:
/// prunes only when both candidates fail.
SieveVerdict witness_prune(const hminus::HMinusResult& h, bool odd_index);

}  // namespace cmf::groups
