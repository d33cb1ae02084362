#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmfields/groups.hpp"

namespace cmf::enumerate {

using arith::uint64_t;

/// Exact discriminant bound: an integer, a fractional power of ten
/// 10^(num/den), or unbounded.  All comparisons clear denominators; no
/// floating point is involved.
class ExactBound {
  public:
    static ExactBound from_integer(mpz_class v);
    static ExactBound power_of_ten(uint64_t num, uint64_t den);
    static ExactBound unbounded();
    /// Accepts "163", "1e28", "10^115", "10^115/4".
    static ExactBound parse(const std::string& text);

    bool is_unbounded() const { return unbounded_; }
    bool admits(const mpz_class& v) const;
    bool at_boundary(const mpz_class& v) const;
    /// Smallest integer >= bound (search sizing); throws when unbounded.
    mpz_class ceiling() const;
    std::string str() const;

  private:
    bool unbounded_ = false;
    std::optional<mpz_class> integer_;
    uint64_t pow_num_ = 0, pow_den_ = 1;  // 10^(num/den) when integer_ empty
    mpz_class ten_pow_;                   // cached 10^num
};

enum class SignatureFilter { Any, TotallyReal, CmOnly };
enum class SieveMode { Off, RelativeClassNumberOne };

struct EnumerationRequest {
    std::vector<uint64_t> shape;  // invariant factors, each dividing the next
    ExactBound disc_bound = ExactBound::unbounded();
    SignatureFilter signature = SignatureFilter::Any;
    SieveMode sieve = SieveMode::Off;
    uint64_t max_conductor = 0;        // 0: derive from disc_bound
    uint64_t conductor_ceiling = 5'000'000;  // resource refusal above this
    int threads = 1;
};

struct FieldRecord {
    fields::AbelianFieldSpec spec;
    std::optional<hminus::HMinusResult> hminus;  // CM fields only
    groups::SieveVerdict verdict;
    bool at_boundary = false;
};

struct EnumerationReport {
    uint64_t total_found = 0;
    uint64_t cm_count = 0;
    uint64_t pruned_count = 0;
    uint64_t useful_count = 0;
    uint64_t ambiguous_count = 0;  // verdict differs between Hasse candidates
    uint64_t boundary_count = 0;   // fields exactly on the discriminant bound
    std::vector<FieldRecord> fields;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sound upper bound on the lcm-conductor of any field matching the request.
uint64_t conductor_search_bound(const std::vector<uint64_t>& shape, const ExactBound& bound);

/// All abelian fields over Q with the given Galois shape and |disc| within
/// the bound (and lcm-conductor <= max_conductor when set), deduplicated,
/// in (disc, conductor, character key) order.
EnumerationReport enumerate_abelian(const EnumerationRequest& req);

/// Apply the relative-class-number-one sieve to an enumerated list.
EnumerationReport sieve_pass(std::vector<FieldRecord> fields);

}  // namespace cmf::enumerate
