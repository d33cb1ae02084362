#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cmfields/enumerate.hpp"
#include "cmfields/polynomial.hpp"

namespace cmf::verify {

struct TableRow {
    std::uint64_t degree = 0;
    groups::GroupId group;
    IntPoly polynomial;
    std::uint64_t claimed_h = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> claimed_disc;  // (p, e)
    int line = 0;

    mpz_class disc_magnitude() const;
};

/// Parse the appendix TSV: degree, group order, group id, coefficients
/// (low-to-high, comma separated), h, factored disc ("p^e p^e ...").
std::vector<TableRow> parse_table(const std::filesystem::path& path);

struct CheckResult {
    char id;  // 'a'..'f'
    bool passed;
    std::string note;
};

struct RowVerdict {
    const TableRow* row = nullptr;
    std::vector<CheckResult> checks;
    bool all_passed = true;
};

struct TableVerdict {
    std::vector<RowVerdict> rows;
    bool all_passed = true;
    std::uint64_t structural_failures = 0;  // checks a-c
};

/// Run checks on every row:
///   (a) irreducible over Q        (b) totally imaginary (Sturm = 0)
///   (c) poly disc = claimed disc * square, sign (-1)^(deg/2)
///   (d) degree 2: form-count class number matches
///   (e) degree 4 abelian: assembled h_L matches
///   (f) abelian rows: matched against the enumerated fields with the
///       claimed discriminant/shape, h^- consistent with claimed h
/// `structural_only` restricts to (a)-(c).
TableVerdict verify_table(const std::vector<TableRow>& rows, bool structural_only = false);

RowVerdict verify_row(const TableRow& row);

}  // namespace cmf::verify
