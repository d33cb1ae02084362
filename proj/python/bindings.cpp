#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmfields/bounds.hpp"
#include "cmfields/enumerate.hpp"
#include "cmfields/verify.hpp"

namespace py = pybind11;
using namespace cmf;

namespace {

std::string q_str(hminus::QIndex q) {
    switch (q) {
        case hminus::QIndex::One: return "1";
        case hminus::QIndex::Two: return "2";
        default: return "ambiguous";
    }
}

py::dict hminus_dict(const hminus::HMinusResult& r) {
    py::dict d;
    d["value"] = r.value.get_str();
    d["q"] = q_str(r.q_index);
    d["w"] = r.w;
    d["is_integer"] = r.is_integer;
    return d;
}

py::dict field_dict(const enumerate::FieldRecord& rec) {
    py::dict d;
    d["degree"] = rec.spec.degree();
    d["shape"] = rec.spec.galois_shape();
    d["conductor"] = rec.spec.conductor();
    d["disc"] = rec.spec.discriminant_magnitude().get_str();
    d["totally_real"] = rec.spec.totally_real();
    std::vector<std::string> keys;
    for (const auto& chi : rec.spec.characters()) keys.push_back(chi.key());
    d["characters"] = keys;
    if (rec.hminus) d["hminus"] = hminus_dict(*rec.hminus);
    d["pruned"] = rec.verdict.prune;
    return d;
}

fields::CMStructure cm_from_discs(const std::vector<std::int64_t>& ds) {
    std::vector<chars::DirichletCharacter> gens;
    for (auto d : ds) gens.push_back(chars::DirichletCharacter::quadratic(d));
    auto spec = fields::AbelianFieldSpec::from_generators(gens);
    auto cls = fields::classify_cm(spec);
    if (!cls.is_cm) throw std::invalid_argument("field is totally real");
    return *cls.cm;
}

}  // namespace

PYBIND11_MODULE(_cmfields, m) {
    m.doc() = "abelian CM fields: enumeration, relative class numbers, table checks";

    m.def("factor", [](std::uint64_t n) {
        py::list out;
        for (auto [p, e] : arith::factor(n).factors) out.append(py::make_tuple(p, e));
        return out;
    });
    m.def("euler_phi", [](std::uint64_t n) { return arith::euler_phi(n); });
    m.def("unit_group", [](std::uint64_t f) {
        auto u = arith::unit_group(f);
        return py::make_tuple(u.generators, u.orders);
    });
    m.def("imaginary_quadratic_h", &hminus::imaginary_quadratic_h);
    m.def("real_quadratic_h", &hminus::real_quadratic_h);
    m.def("fundamental_unit", [](std::int64_t d) {
        const auto& u = hminus::fundamental_unit(d);
        return py::make_tuple(u.x.get_str(), u.y.get_str(), u.norm);
    });
    m.def("relative_class_number",
          [](const std::vector<std::int64_t>& quad_discs) {
              return hminus_dict(hminus::relative_class_number(cm_from_discs(quad_discs)));
          },
          py::arg("quadratic_discriminants"),
          "h^- of the multiquadratic CM field generated by the given fundamental "
          "discriminants");
    m.def("quartic_class_number", [](const std::vector<std::int64_t>& quad_discs) {
        return hminus::quartic_class_number(cm_from_discs(quad_discs)).get_str();
    });
    m.def("cyclotomic_hminus", [](std::uint64_t n) {
        auto spec = fields::AbelianFieldSpec::from_generators(chars::all_characters(n));
        auto cls = fields::classify_cm(spec);
        if (!cls.is_cm) throw std::invalid_argument("totally real");
        return hminus_dict(hminus::relative_class_number(*cls.cm));
    });

    m.def("enumerate_fields",
          [](const std::vector<std::uint64_t>& shape, const std::string& bound,
             std::uint64_t max_conductor, const std::string& signature, bool sieve,
             int threads) {
              enumerate::EnumerationRequest req;
              req.shape = shape;
              if (!bound.empty()) req.disc_bound = enumerate::ExactBound::parse(bound);
              req.max_conductor = max_conductor;
              req.threads = threads;
              if (signature == "cm") req.signature = enumerate::SignatureFilter::CmOnly;
              if (signature == "totally_real")
                  req.signature = enumerate::SignatureFilter::TotallyReal;
              if (sieve) req.sieve = enumerate::SieveMode::RelativeClassNumberOne;
              auto rep = enumerate::enumerate_abelian(req);
              py::dict out;
              out["total"] = rep.total_found;
              out["cm"] = rep.cm_count;
              out["pruned"] = rep.pruned_count;
              out["useful"] = rep.useful_count;
              out["ambiguous"] = rep.ambiguous_count;
              py::list fields;
              for (const auto& rec : rep.fields) fields.append(field_dict(rec));
              out["fields"] = fields;
              return out;
          },
          py::arg("shape"), py::arg("bound") = "", py::arg("max_conductor") = 0,
          py::arg("signature") = "any", py::arg("sieve") = false, py::arg("threads") = 1);

    m.def("bound_for", [](std::uint64_t degree) {
        const auto& e = bounds::table().bound_for(degree);
        py::dict d;
        d["alpha"] = static_cast<double>(e.alpha_hundredths) / 100.0;
        d["disc_bound"] = e.bound_text;
        return d;
    });

    m.def("group_report", [](std::uint64_t order, std::uint64_t index) {
        const auto& g = groups::catalog().at({order, index});
        py::dict d;
        d["name"] = g.name();
        d["order"] = g.order();
        d["center_order"] = g.center().size();
        d["abelianization"] = g.abelianization_shape();
        d["cm_admissible"] = groups::cm_admissible(g).admissible;
        return d;
    });

    m.def("poly_discriminant", [](const std::vector<std::string>& coeffs) {
        std::vector<mpz_class> c;
        for (const auto& s : coeffs) c.emplace_back(s);
        return verify::poly_discriminant(verify::IntPoly(std::move(c))).get_str();
    });
    m.def("sturm_real_roots", [](const std::vector<std::string>& coeffs) {
        std::vector<mpz_class> c;
        for (const auto& s : coeffs) c.emplace_back(s);
        return verify::sturm_real_roots(verify::IntPoly(std::move(c)));
    });
    m.def("is_irreducible", [](const std::vector<std::string>& coeffs) {
        std::vector<mpz_class> c;
        for (const auto& s : coeffs) c.emplace_back(s);
        return verify::certify_irreducible(verify::IntPoly(std::move(c))).irreducible;
    });
    m.def("verify_table", [](const std::string& path, bool structural_only) {
        auto rows = verify::parse_table(path);
        auto verdict = verify::verify_table(rows, structural_only);
        py::list out;
        for (const auto& rv : verdict.rows) {
            py::dict d;
            d["line"] = rv.row->line;
            d["degree"] = rv.row->degree;
            d["passed"] = rv.all_passed;
            out.append(d);
        }
        return py::make_tuple(verdict.all_passed, out);
    }, py::arg("path"), py::arg("structural_only") = false);
}
