#include "cmfields/bounds.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cmfields/data_files.hpp"

namespace cmf::bounds {

namespace {

mpz_class parse_bound(const std::string& text) {
    auto caret = text.find('^');
    if (caret == std::string::npos) return mpz_class(text);
    mpz_class base(text.substr(0, caret));
    unsigned long expo = std::stoul(text.substr(caret + 1));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), expo);
    return out;
}

}  // namespace

BoundTable BoundTable::load(const std::string& filename) {
    std::ifstream in(data::find_data_file(filename));
    BoundTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        BoundEntry e;
        std::string alpha;
        row >> e.degree >> alpha >> e.bound_text;
        if (row.fail()) throw std::runtime_error("bounds table: malformed line: " + line);
        auto dot = alpha.find('.');
        if (dot == std::string::npos || alpha.size() - dot != 3)
            throw std::runtime_error("bounds table: alpha needs two decimals: " + alpha);
        e.alpha_hundredths =
            std::stoull(alpha.substr(0, dot)) * 100 + std::stoull(alpha.substr(dot + 1));
        e.disc_bound = parse_bound(e.bound_text);
        // consistency: alpha^d <= 10 * disc_bound, checked as
        // (100 alpha)^d <= 10 * 100^d * disc_bound with exact powering
        mpz_class lhs, scale;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(e.alpha_hundredths),
                      static_cast<unsigned long>(e.degree));
        mpz_ui_pow_ui(scale.get_mpz_t(), 100, static_cast<unsigned long>(e.degree));
        if (lhs > 10 * scale * e.disc_bound)
            throw std::runtime_error("bounds table: alpha does not imply the bound at degree " +
                                     std::to_string(e.degree));
        t.rows_.emplace(e.degree, std::move(e));
    }
    if (t.rows_.empty()) throw std::runtime_error("bounds table: no rows");
    return t;
}

const BoundEntry& BoundTable::bound_for(std::uint64_t degree) const {
    auto it = rows_.find(degree);
    if (it == rows_.end())
        throw std::out_of_range("no published bound for degree " + std::to_string(degree) +
                                " (bounds are data, never interpolated)");
    return it->second;
}

bool BoundTable::admissible_disc(std::uint64_t degree, const mpz_class& disc) const {
    const auto& e = bound_for(degree);
    if (disc > e.disc_bound) return false;
    // disc <= floor(alpha^d)  <=>  (100 disc)^1 ... compare disc * 100^d with
    // (100 alpha)^d
    mpz_class lhs, alpha_pow;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 100, static_cast<unsigned long>(degree));
    lhs *= disc;
    mpz_ui_pow_ui(alpha_pow.get_mpz_t(), static_cast<unsigned long>(e.alpha_hundredths),
                  static_cast<unsigned long>(degree));
    return lhs <= alpha_pow;
}

const BoundTable& table() {
    static std::mutex mu;
    static BoundTable t;
    static bool loaded = false;
    std::scoped_lock lock(mu);
    if (!loaded) {
        t = BoundTable::load();
        loaded = true;
    }
    return t;
}

}  // namespace cmf::bounds
