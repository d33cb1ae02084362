#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace cmf::bounds {

struct BoundEntry {
    std::uint64_t degree = 0;
    std::uint64_t alpha_hundredths = 0;  // alpha * 100, exact
    mpz_class disc_bound;                // published power-of-ten (or exact) bound
    std::string bound_text;              // "10^115" or "1163^10"
};

class BoundTable {
  public:
    /// Parse the bundled table; verifies on load that each alpha implies the
    /// power-of-ten bound within a factor of 10 (exact integer powering).
    static BoundTable load(const std::string& filename = "bounds_table.tsv");

    /// Throws std::out_of_range for degrees without a published bound.
    const BoundEntry& bound_for(std::uint64_t degree) const;

    /// disc <= disc_bound and disc <= floor(alpha^degree), both exact.
    bool admissible_disc(std::uint64_t degree, const mpz_class& disc_magnitude) const;

    const std::map<std::uint64_t, BoundEntry>& rows() const { return rows_; }

  private:
    std::map<std::uint64_t, BoundEntry> rows_;
};

const BoundTable& table();

}  // namespace cmf::bounds
