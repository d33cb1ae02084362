// cmfields: enumerate abelian CM fields, compute relative class numbers,
// sieve candidate fields, query group/bound data, verify field tables.
//
// Exit codes: 0 success, 1 check failed, 2 resource refusal, 3 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cmfields/bounds.hpp"
#include "cmfields/data_files.hpp"
#include "cmfields/enumerate.hpp"
#include "cmfields/verify.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace cmf;

namespace {

std::vector<std::uint64_t> parse_shape(const std::string& text) {
    std::vector<std::uint64_t> shape;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, 'x')) shape.push_back(std::stoull(item));
    return shape;
}

std::string factored(const mpz_class& disc, const fields::AbelianFieldSpec& spec) {
    // disc is a product of character conductors, each a machine word
    std::map<std::uint64_t, std::uint64_t> expo;
    for (const auto& chi : spec.characters())
        for (auto [p, e] : arith::factor(chi.conductor()).factors)
            expo[p] += static_cast<std::uint64_t>(e);
    mpz_class check = 1;
    std::string out;
    for (auto [p, e] : expo) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p);
        if (e > 1) out += '^' + std::to_string(e);
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        check *= pe;
    }
    if (out.empty()) out = "1";
    if (check != disc) throw std::logic_error("discriminant factorization mismatch");
    return out;
}

std::string q_str(hminus::QIndex q) {
    switch (q) {
        case hminus::QIndex::One: return "1";
        case hminus::QIndex::Two: return "2";
        default: return "ambiguous";
    }
}

std::string rational_str(const mpq_class& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

json field_json(const enumerate::FieldRecord& rec) {
    json f;
    f["degree"] = rec.spec.degree();
    f["shape"] = rec.spec.galois_shape();
    f["conductor"] = rec.spec.conductor();
    f["disc"] = factored(rec.spec.discriminant_magnitude(), rec.spec);
    f["signature"] = rec.spec.totally_real() ? "totally_real" : "cm";
    json chars = json::array();
    for (const auto& chi : rec.spec.characters()) chars.push_back(chi.key());
    f["characters"] = chars;
    if (rec.hminus) {
        f["w"] = rec.hminus->w;
        f["q"] = q_str(rec.hminus->q_index);
        f["hminus"] = rational_str(rec.hminus->value);
        if (rec.hminus->q_index == hminus::QIndex::Ambiguous)
            f["hminus_q2"] = rational_str(rec.hminus->other_candidate());
    }
    f["verdict"] = rec.verdict.prune ? "prune" : "keep";
    if (rec.verdict.ambiguous) f["verdict_ambiguous"] = true;
    if (rec.at_boundary) f["at_boundary"] = true;
    return f;
}

void write_report(const enumerate::EnumerationReport& rep, const std::string& format,
                  std::ostream& out) {
    if (format == "json") {
        json j;
        j["summary"] = {{"total", rep.total_found},       {"cm", rep.cm_count},
                        {"pruned", rep.pruned_count},     {"useful", rep.useful_count},
                        {"ambiguous", rep.ambiguous_count}, {"boundary", rep.boundary_count}};
        json fields = json::array();
        for (const auto& rec : rep.fields) fields.push_back(field_json(rec));
        j["fields"] = fields;
        out << j.dump(2) << "\n";
        return;
    }
    out << "degree\tshape\tconductor\tdisc\tsignature\tw\tQ\thminus\tverdict\n";
    for (const auto& rec : rep.fields) {
        std::string shape;
        for (auto s : rec.spec.galois_shape())
            shape += (shape.empty() ? "" : "x") + std::to_string(s);
        out << rec.spec.degree() << '\t' << shape << '\t' << rec.spec.conductor() << '\t'
            << factored(rec.spec.discriminant_magnitude(), rec.spec) << '\t'
            << (rec.spec.totally_real() ? "totally_real" : "cm") << '\t';
        if (rec.hminus)
            out << rec.hminus->w << '\t' << q_str(rec.hminus->q_index) << '\t'
                << rational_str(rec.hminus->value);
        else
            out << "-\t-\t-";
        out << '\t' << (rec.verdict.prune ? "prune" : "keep") << '\n';
    }
}

int cmd_enumerate(const std::string& shape_text, const std::string& bound_text,
                  std::uint64_t max_conductor, bool cm_only, bool totally_real,
                  bool totally_real_context, bool sieve, const std::string& format,
                  const std::string& out_path, int threads) {
    enumerate::EnumerationRequest req;
    req.shape = parse_shape(shape_text);
    if (!bound_text.empty()) req.disc_bound = enumerate::ExactBound::parse(bound_text);
    req.max_conductor = max_conductor;
    req.threads = threads;
    if (cm_only) req.signature = enumerate::SignatureFilter::CmOnly;
    if (totally_real || totally_real_context)
        req.signature = enumerate::SignatureFilter::TotallyReal;
    if (sieve) req.sieve = enumerate::SieveMode::RelativeClassNumberOne;
    std::uint64_t degree = 1;
    for (auto s : req.shape) degree *= s;
    if (degree % 2 == 1 && req.signature != enumerate::SignatureFilter::TotallyReal) {
        std::cerr << "error: odd shape cannot be CM; allowed only with --totally-real-context\n";
        return 3;
    }
    auto rep = enumerate::enumerate_abelian(req);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        write_report(rep, format, out);
    } else {
        write_report(rep, format, std::cout);
    }
    std::cerr << rep.total_found << " found / " << rep.pruned_count << " pruned / "
              << rep.useful_count << " useful";
    if (rep.ambiguous_count) std::cerr << " / " << rep.ambiguous_count << " ambiguous";
    if (rep.boundary_count) std::cerr << " / " << rep.boundary_count << " on the boundary";
    std::cerr << "\n";
    return 0;
}

fields::CMStructure cm_from_quadratics(const std::vector<std::int64_t>& ds) {
    std::vector<chars::DirichletCharacter> gens;
    for (auto d : ds) gens.push_back(chars::DirichletCharacter::quadratic(d));
    auto spec = fields::AbelianFieldSpec::from_generators(gens);
    auto cls = fields::classify_cm(spec);
    if (!cls.is_cm) throw std::invalid_argument("field is totally real");
    return *cls.cm;
}

int cmd_hminus(std::int64_t quadratic, const std::string& biquadratic, std::uint64_t cyclo) {
    fields::CMStructure cm;
    if (quadratic != 0) {
        cm = cm_from_quadratics({quadratic});
    } else if (!biquadratic.empty()) {
        auto comma = biquadratic.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--biquadratic needs d1,d2");
        cm = cm_from_quadratics({std::stoll(biquadratic.substr(0, comma)),
                                 std::stoll(biquadratic.substr(comma + 1))});
    } else if (cyclo) {
        auto spec = fields::AbelianFieldSpec::from_generators(chars::all_characters(cyclo));
        auto cls = fields::classify_cm(spec);
        if (!cls.is_cm) throw std::invalid_argument("cyclotomic field is totally real");
        cm = *cls.cm;
    } else {
        throw std::invalid_argument("need --quadratic, --biquadratic or --cyclotomic");
    }
    auto r = hminus::relative_class_number(cm);
    if (cm.field.degree() == 2) {
        std::cout << "h^- = h = " << rational_str(r.value) << "\n";
        return 0;
    }
    std::cout << "degree " << cm.field.degree() << ", conductor " << cm.field.conductor()
              << ", w = " << r.w << ", Q = " << q_str(r.q_index)
              << ", h^- = " << rational_str(r.value);
    if (r.q_index == hminus::QIndex::Ambiguous)
        std::cout << " (Q=2 candidate " << rational_str(r.other_candidate()) << ")";
    std::cout << "\n";
    if (cm.field.degree() == 4) {
        std::cout << "h = " << hminus::quartic_class_number(cm).get_str()
                  << " (real subfield disc " << cm.real_subfield.discriminant_magnitude()
                  << ")\n";
    }
    return 0;
}

int cmd_sieve(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open " + input);
    json j;
    in >> j;
    std::vector<enumerate::FieldRecord> recs;
    for (const auto& f : j.at("fields")) {
        std::vector<chars::DirichletCharacter> gens;
        for (const auto& key : f.at("characters")) {
            std::string k = key.get<std::string>();
            auto colon = k.find(':');
            std::uint64_t cond = std::stoull(k.substr(0, colon));
            std::vector<std::uint64_t> exps;
            std::stringstream es(k.substr(colon + 1));
            std::string e;
            while (std::getline(es, e, ',')) exps.push_back(std::stoull(e));
            gens.push_back(chars::DirichletCharacter::from_exponents(cond, exps));
        }
        enumerate::FieldRecord rec;
        rec.spec = fields::AbelianFieldSpec::from_generators(gens);
        if (!rec.spec.totally_real()) {
            auto cls = fields::classify_cm(rec.spec);
            rec.hminus = hminus::relative_class_number(*cls.cm);
        }
        recs.push_back(std::move(rec));
    }
    auto rep = enumerate::sieve_pass(std::move(recs));
    write_report(rep, "json", std::cout);
    std::cerr << rep.total_found << " found / " << rep.pruned_count << " pruned / "
              << rep.useful_count << " useful\n";
    return 0;
}

int cmd_groups(const std::string& id_text, bool list, bool check) {
    const auto& cat = groups::catalog();
    if (list) {
        for (const auto& [id, g] : cat)
            std::cout << "(" << id.first << ", " << id.second << ") " << g.name() << "\n";
        return 0;
    }
    if (check) {
        bool ok = true;
        for (const auto& [id, g] : cat) {
            auto adm = groups::cm_admissible(g);
            if (id != groups::GroupId{3, 1} && !adm.admissible) {
                std::cout << g.name() << ": no central involution\n";
                ok = false;
            }
        }
        std::cout << (ok ? "catalog admissibility: ok" : "catalog admissibility: FAILED") << "\n";
        return ok ? 0 : 1;
    }
    auto comma = id_text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--id needs order,index");
    groups::GroupId id{std::stoull(id_text.substr(0, comma)),
                       std::stoull(id_text.substr(comma + 1))};
    auto it = cat.find(id);
    if (it == cat.end()) throw std::invalid_argument("group not in the catalog");
    const auto& g = it->second;
    std::cout << g.name() << " of order " << g.order() << "\n";
    std::cout << "center order " << g.center().size() << "\n";
    auto series = groups::derived_series(g);
    std::cout << "derived series orders:";
    for (auto it2 = series.subgroups.rbegin(); it2 != series.subgroups.rend(); ++it2)
        std::cout << " " << it2->size();
    std::cout << "\n";
    std::cout << "abelianization:";
    for (auto d : g.abelianization_shape()) std::cout << " " << d;
    std::cout << "\n";
    auto adm = groups::cm_admissible(g);
    std::cout << "CM-admissible: " << (adm.admissible ? "yes" : "no") << " ("
              << adm.central_involutions.size() << " central involution(s))\n";
    return 0;
}

int cmd_bounds(std::uint64_t degree, bool all) {
    const auto& t = bounds::table();
    auto show = [](const bounds::BoundEntry& e) {
        std::cout << "degree " << e.degree << ": alpha = " << e.alpha_hundredths / 100 << "."
                  << (e.alpha_hundredths % 100 < 10 ? "0" : "")
                  << e.alpha_hundredths % 100 << ", |disc| <= " << e.bound_text << "\n";
    };
    if (all) {
        for (const auto& [d, e] : t.rows()) show(e);
        return 0;
    }
    show(t.bound_for(degree));
    return 0;
}

int cmd_verify(const std::string& table, bool structural, const std::string& report_path) {
    auto path = table.empty() ? data::find_data_file("appendix_fields.tsv")
                              : std::filesystem::path(table);
    auto rows = verify::parse_table(path);
    auto verdict = verify::verify_table(rows, structural);
    json j;
    j["rows"] = json::array();
    std::uint64_t failed = 0;
    for (const auto& rv : verdict.rows) {
        json r;
        r["line"] = rv.row->line;
        r["degree"] = rv.row->degree;
        r["group"] = {rv.row->group.first, rv.row->group.second};
        r["h"] = rv.row->claimed_h;
        r["passed"] = rv.all_passed;
        json checks = json::array();
        for (const auto& c : rv.checks) {
            json cj;
            cj["check"] = std::string(1, c.id);
            cj["passed"] = c.passed;
            if (!c.note.empty()) cj["note"] = c.note;
            checks.push_back(cj);
        }
        r["checks"] = checks;
        if (!rv.all_passed) ++failed;
        j["rows"].push_back(r);
    }
    j["all_passed"] = verdict.all_passed;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << j.dump(2) << "\n";
    }
    std::cout << (verdict.rows.size() - failed) << "/" << verdict.rows.size()
              << " rows pass\n";
    return verdict.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian CM field enumeration and class-number tables"};
    app.require_subcommand(1);

    // enumerate
    std::string shape_text, bound_text, format = "tsv", out_path;
    std::uint64_t max_conductor = 0;
    bool cm_only = false, totally_real = false, totally_real_context = false, sieve = false;
    int threads = 1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate abelian fields");
    enumerate_cmd->add_option("--shape", shape_text, "invariant factors, e.g. 2x2x4")
        ->required();
    enumerate_cmd->add_option("--bound", bound_text, "disc bound: 163, 1e28, 10^115/4");
    enumerate_cmd->add_option("--max-conductor", max_conductor, "cap the lcm conductor");
    enumerate_cmd->add_flag("--cm-only", cm_only, "CM fields only");
    enumerate_cmd->add_flag("--totally-real", totally_real, "totally real fields only");
    enumerate_cmd->add_flag("--totally-real-context", totally_real_context,
                            "allow odd shapes (forces the totally real filter)");
    enumerate_cmd->add_flag("--sieve", sieve, "apply the h^- in {1,2,4} sieve");
    enumerate_cmd->add_option("--format", format, "tsv or json");
    enumerate_cmd->add_option("--out", out_path, "write the report to a file");
    enumerate_cmd->add_option("--threads", threads, "parallel conductor stripes");

    // hminus
    std::int64_t quadratic = 0;
    std::string biquadratic;
    std::uint64_t cyclo = 0;
    auto* hminus_cmd = app.add_subcommand("hminus", "relative class number of a CM field");
    hminus_cmd->add_option("--quadratic", quadratic, "fundamental discriminant d < 0");
    hminus_cmd->add_option("--biquadratic", biquadratic, "two discriminants d1,d2");
    hminus_cmd->add_option("--cyclotomic", cyclo, "cyclotomic field Q(zeta_n)");

    // sieve
    std::string sieve_input;
    auto* sieve_cmd = app.add_subcommand("sieve", "re-apply the sieve to a JSON report");
    sieve_cmd->add_option("--input", sieve_input, "enumeration report (json)")->required();

    // groups
    std::string group_id;
    bool group_list = false, group_check = false;
    auto* groups_cmd = app.add_subcommand("groups", "finite group catalog queries");
    groups_cmd->add_option("--id", group_id, "group identifier order,index");
    groups_cmd->add_flag("--list", group_list, "list the catalog");
    groups_cmd->add_flag("--check", group_check, "check CM admissibility of the catalog");
    bool group_report = false;
    groups_cmd->add_flag("--report", group_report, "full report (default for --id)");

    // bounds
    std::uint64_t bound_degree = 0;
    bool bounds_all = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "published discriminant bounds");
    bounds_cmd->add_option("--degree", bound_degree, "field degree");
    bounds_cmd->add_flag("--all", bounds_all, "print the whole table");

    // verify
    std::string table_path, report_path;
    bool structural = false;
    auto* verify_cmd = app.add_subcommand("verify", "verify a field table");
    verify_cmd->add_option("--table", table_path, "table file (default: bundled appendix)");
    verify_cmd->add_flag("--structural-only", structural, "checks (a)-(c) only");
    verify_cmd->add_option("--report", report_path, "write a JSON verdict report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate_cmd->parsed())
            return cmd_enumerate(shape_text, bound_text, max_conductor, cm_only, totally_real,
                                 totally_real_context, sieve, format, out_path, threads);
        if (hminus_cmd->parsed()) return cmd_hminus(quadratic, biquadratic, cyclo);
        if (sieve_cmd->parsed()) return cmd_sieve(sieve_input);
        if (groups_cmd->parsed()) return cmd_groups(group_id, group_list, group_check);
        if (bounds_cmd->parsed()) return cmd_bounds(bound_degree, bounds_all);
        if (verify_cmd->parsed()) return cmd_verify(table_path, structural, report_path);
    } catch (const enumerate::ResourceError& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
