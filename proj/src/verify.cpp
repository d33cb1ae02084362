#include "cmfields/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cmf::verify {

mpz_class TableRow::disc_magnitude() const {
    mpz_class d = 1;
    for (auto [p, e] : claimed_disc) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        d *= pe;
    }
    return d;
}

std::vector<TableRow> parse_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table: " + path.string());
    std::vector<TableRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string deg, gorder, gid, coeffs, h, disc;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error(path.filename().string() + ":" + std::to_string(lineno) +
                                     ": " + why);
        };
        if (!std::getline(ss, deg, '\t') || !std::getline(ss, gorder, '\t') ||
            !std::getline(ss, gid, '\t') || !std::getline(ss, coeffs, '\t') ||
            !std::getline(ss, h, '\t') || !std::getline(ss, disc))
            fail("expected 6 tab-separated fields");
        TableRow row;
        row.line = lineno;
        try {
            row.degree = std::stoull(deg);
            row.group = {std::stoull(gorder), std::stoull(gid)};
            row.polynomial = IntPoly::from_string_coeffs(coeffs);
            row.claimed_h = std::stoull(h);
        } catch (const std::exception& e) {
            fail(std::string("bad field: ") + e.what());
        }
        if (row.polynomial.degree() != static_cast<int>(row.degree))
            fail("coefficient count does not match the degree");
        if (row.group.first != row.degree) fail("group order does not match the degree");
        std::istringstream ds(disc);
        std::string fac;
        while (ds >> fac) {
            auto caret = fac.find('^');
            std::uint64_t p, e = 1;
            try {
                p = std::stoull(fac.substr(0, caret));
                if (caret != std::string::npos) e = std::stoull(fac.substr(caret + 1));
            } catch (const std::exception&) {
                fail("bad discriminant factor: " + fac);
                return rows;
            }
            if (!arith::is_prime(p)) fail("discriminant factor not prime: " + fac);
            row.claimed_disc.emplace_back(p, e);
        }
        if (row.claimed_disc.empty()) fail("missing discriminant");
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

CheckResult check_irreducible(const TableRow& row) {
    try {
        auto res = certify_irreducible(row.polynomial);
        const char* how =
            res.method == IrreducibilityMethod::ModularDegrees ? "modular degrees" : "zassenhaus";
        return {'a', res.irreducible, how};
    } catch (const std::exception& e) {
        return {'a', false, e.what()};
    }
}

CheckResult check_totally_imaginary(const TableRow& row) {
    try {
        int roots = sturm_real_roots(row.polynomial);
        return {'b', roots == 0, roots == 0 ? "" : std::to_string(roots) + " real roots"};
    } catch (const std::exception& e) {
        return {'b', false, e.what()};
    }
}

CheckResult check_discriminant(const TableRow& row) {
    mpz_class d = poly_discriminant(row.polynomial);
    // totally imaginary degree n: r2 = n/2 and sign(disc) = (-1)^(n/2)
    bool want_negative = (row.degree / 2) % 2 == 1;
    if ((d < 0) != want_negative) return {'c', false, "wrong discriminant sign"};
    mpz_class claimed = row.disc_magnitude();
    if (d % claimed != 0) return {'c', false, "claimed discriminant does not divide"};
    mpz_class ratio = abs(d) / claimed;
    bool sq = mpz_perfect_square_p(ratio.get_mpz_t());
    return {'c', sq, sq ? "" : "index not a perfect square"};
}

CheckResult check_quadratic_h(const TableRow& row) {
    mpz_class m = row.disc_magnitude();
    if (!m.fits_slong_p()) return {'d', false, "discriminant too large"};
    std::int64_t d = -m.get_si();
    try {
        auto h = hminus::imaginary_quadratic_h(d);
        return {'d', h == row.claimed_h,
                h == row.claimed_h ? "" : "computed h = " + std::to_string(h)};
    } catch (const std::exception& e) {
        return {'d', false, e.what()};
    }
}

bool group_is_abelian(const groups::GroupId& id) {
    auto it = groups::catalog().find(id);
    return it != groups::catalog().end() && it->second.is_abelian();
}

struct MatchPool {
    std::vector<const enumerate::FieldRecord*> fields;
};

// compatibility of a table row with an enumerated field
bool compatible(const TableRow& row, const enumerate::FieldRecord& rec) {
    if (!rec.hminus) return false;
    mpz_class h(static_cast<unsigned long>(row.claimed_h));
    if (row.degree == 4) {
        auto cls = fields::classify_cm(rec.spec);
        return hminus::quartic_class_number(*cls.cm) == h;
    }
    auto divides = [&](const mpq_class& v) {
        return v.get_den() == 1 && v != 0 && h % v.get_num() == 0;
    };
    if (rec.hminus->q_index != hminus::QIndex::Ambiguous) return divides(rec.hminus->value);
    return divides(rec.hminus->value) || divides(rec.hminus->other_candidate());
}

// maximum bipartite matching (rows of one (disc, shape) class vs fields)
bool perfect_matching(const std::vector<const TableRow*>& rows,
                      const std::vector<const enumerate::FieldRecord*>& fields) {
    std::vector<int> match_field(fields.size(), -1);
    std::vector<char> used;
    std::function<bool(size_t)> augment = [&](size_t r) -> bool {
        for (size_t f = 0; f < fields.size(); ++f) {
            if (used[f] || !compatible(*rows[r], *fields[f])) continue;
            used[f] = 1;
            if (match_field[f] < 0 || augment(static_cast<size_t>(match_field[f]))) {
                match_field[f] = static_cast<int>(r);
                return true;
            }
        }
        return false;
    };
    for (size_t r = 0; r < rows.size(); ++r) {
        used.assign(fields.size(), 0);
        if (!augment(r)) return false;
    }
    return true;
}

}  // namespace

RowVerdict verify_row(const TableRow& row) {
    RowVerdict v;
    v.row = &row;
    v.checks.push_back(check_irreducible(row));
    v.checks.push_back(check_totally_imaginary(row));
    v.checks.push_back(check_discriminant(row));
    if (row.degree == 2) v.checks.push_back(check_quadratic_h(row));
    for (auto& c : v.checks) v.all_passed &= c.passed;
    return v;
}

TableVerdict verify_table(const std::vector<TableRow>& rows, bool structural_only) {
    TableVerdict out;
    out.rows.reserve(rows.size());
    for (const auto& row : rows) out.rows.push_back(verify_row(row));

    if (!structural_only) {
        // group the abelian rows by Galois shape, enumerate once per shape
        std::map<std::vector<std::uint64_t>, std::vector<RowVerdict*>> by_shape;
        for (auto& rv : out.rows) {
            if (!group_is_abelian(rv.row->group)) continue;
            auto shape = groups::catalog().at(rv.row->group).abelianization_shape();
            by_shape[shape].push_back(&rv);
        }
        for (auto& [shape, verdicts] : by_shape) {
            mpz_class maxdisc = 0;
            for (auto* rv : verdicts) maxdisc = std::max(maxdisc, rv->row->disc_magnitude());
            enumerate::EnumerationRequest req;
            req.shape = shape;
            req.disc_bound = enumerate::ExactBound::from_integer(maxdisc);
            req.signature = enumerate::SignatureFilter::CmOnly;
            req.threads = 4;
            auto rep = enumerate::enumerate_abelian(req);
            // bucket rows and fields by discriminant, then match
            std::map<mpz_class, std::vector<RowVerdict*>> rows_by_disc;
            for (auto* rv : verdicts) rows_by_disc[rv->row->disc_magnitude()].push_back(rv);
            std::map<mpz_class, MatchPool> fields_by_disc;
            for (const auto& rec : rep.fields)
                fields_by_disc[rec.spec.discriminant_magnitude()].fields.push_back(&rec);
            for (auto& [disc, rvs] : rows_by_disc) {
                std::vector<const TableRow*> rr;
                for (auto* rv : rvs) rr.push_back(rv->row);
                auto& pool = fields_by_disc[disc];
                bool ok = !pool.fields.empty() && perfect_matching(rr, pool.fields);
                for (auto* rv : rvs) {
                    std::string note;
                    if (!ok)
                        note = pool.fields.empty() ? "no enumerated field with this discriminant"
                                                   : "no class-number-compatible matching";
                    else if (pool.fields.size() > rvs.size())
                        note = "discriminant shared by " + std::to_string(pool.fields.size()) +
                               " fields";
                    char id = rv->row->degree == 4 ? 'e' : 'f';
                    rv->checks.push_back({id, ok, note});
                    if (rv->row->degree == 4) rv->checks.push_back({'f', ok, note});
                    rv->all_passed &= ok;
                }
            }
        }
    }
    for (auto& rv : out.rows) {
        out.all_passed &= rv.all_passed;
        for (auto& c : rv.checks)
            if (!c.passed && (c.id == 'a' || c.id == 'b' || c.id == 'c')) ++out.structural_failures;
    }
    return out;
}

}  // namespace cmf::verify
