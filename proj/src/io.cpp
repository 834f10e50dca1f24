#include "greenring/io.hpp"

#include <fstream>

namespace greenring {

GroupDatum datum_from_json(const json& doc) {
    if (doc.contains("radford")) {
        const json& r = doc.at("radford");
        if (!r.contains("m") || !r.contains("n"))
            throw Error(ErrorKind::ParseError, "radford shorthand needs m and n");
        long long m = r.at("m").get<long long>();
        long long n = r.at("n").get<long long>();
        return Datum::radford(m, n).raw();
    }
    GroupDatum d;
    for (const char* key : {"cyclic_orders", "chi", "g"})
        if (!doc.contains(key) || !doc.at(key).is_array())
            throw Error(ErrorKind::ParseError,
                        std::string("datum file needs array key '") + key + "'");
    d.cyclic_orders = doc.at("cyclic_orders").get<std::vector<long long>>();
    d.chi = doc.at("chi").get<std::vector<long long>>();
    d.g = doc.at("g").get<std::vector<long long>>();
    return d;
}

Datum load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open datum file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad datum file: ") + e.what());
    }
    return Datum::validate(datum_from_json(doc));
}

json datum_to_json(const Datum& d) {
    return json{{"cyclic_orders", d.raw().cyclic_orders},
                {"chi", d.raw().chi},
                {"g", d.raw().g}};
}

json datum_summary_json(const Datum& d) {
    json out;
    out["datum"] = datum_to_json(d);
    out["n"] = d.n();
    out["r"] = d.r();
    out["group_order"] = d.group_order();
    out["dim_H"] = d.n() * d.group_order();
    out["omega0_size"] = d.omega0().size();
    out["omega1_size"] = d.omega1().size();
    out["orbits0"] = d.orbit_reps0().size();
    out["orbits1"] = d.orbit_reps1().size();
    out["basis_size"] = static_cast<long long>(d.n()) * static_cast<long long>(d.omega0().size()) +
                        static_cast<long long>(d.orbit_reps1().size());
    return out;
}

json basis_json(const GreenRing& ring) {
    json labels = json::array();
    for (const Label& l : ring.catalog().basis())
        labels.push_back(json{{"label", ring.catalog().to_string(l)},
                              {"dim", ring.catalog().dim(l)},
                              {"projective", ring.catalog().projective(l)}});
    return json{{"labels", labels}};
}

json mul_json(const GreenRing& ring, const RingElement& x, const RingElement& y,
              const RingElement& product) {
    return json{{"lhs", ring.to_string(x)},
                {"rhs", ring.to_string(y)},
                {"product", ring.to_string(product)}};
}

json table_json(const GreenRing& ring) {
    const Catalog& cat = ring.catalog();
    json products;
    for (std::size_t p = 0; p < cat.size(); ++p) {
        json row;
        for (std::size_t q = 0; q < cat.size(); ++q) {
            RingElement prod(&ring, std::map<std::size_t, Int>(ring.basis_product(p, q)));
            row[cat.to_string(cat.label_at(q))] = ring.to_string(prod);
        }
        products[cat.to_string(cat.label_at(p))] = row;
    }
    json labels = json::array();
    for (const Label& l : cat.basis()) labels.push_back(cat.to_string(l));
    return json{{"labels", labels}, {"products", products}};
}

namespace {

json intmatrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json intmatrix_json_numeric(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json cartan_json(const Grothendieck& g0) {
    CartanMatrix cm = g0.cartan_matrix();
    return json{{"rows", cm.row_labels},
                {"cols", cm.col_labels},
                {"matrix", intmatrix_json_numeric(cm.entries)}};
}

json radical_json(const GreenRing& ring, const PrincipalGeneratorReport& report) {
    json basis = json::array();
    for (const RingElement& e : report.radical.elements(ring)) basis.push_back(ring.to_string(e));
    return json{{"rank", report.radical.rank()},
                {"expected_rank",
                 (ring.datum().n() - 1) * static_cast<long long>(ring.datum().orbit_reps0().size())},
                {"generator", ring.to_string(report.generator)},
                {"principal_ideal_matches", report.matches},
                {"lattice_basis", basis},
                {"lattice_hnf", intmatrix_json(report.radical.basis)}};
}

json idempotents_json(const IdempotentSearchReport& report) {
    return json{{"coeff_bound", report.coeff_bound},
                {"max_support", report.max_support},
                {"candidates_tested", report.candidates_tested},
                {"unit_found", report.unit_found},
                {"nontrivial", report.nontrivial}};
}

json fusion_json(const FusionReport& report) {
    json checks = json::array();
    for (const FusionCheck& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) entry["witness"] = c.witness;
        checks.push_back(entry);
    }
    return json{{"checks", checks}, {"all_pass", report.all_pass()}};
}

json fpdim_json(const StableRing& st, double tolerance) {
    json rows = json::array();
    double max_diff = 0.0;
    for (const FPDimEntry& e : st.fpdim_table()) {
        rows.push_back(json{{"label", e.label},
                            {"eigen", e.eigen},
                            {"closed", e.closed},
                            {"abs_diff", e.abs_diff}});
        max_diff = std::max(max_diff, e.abs_diff);
    }
    return json{{"tolerance", tolerance},
                {"labels", rows},
                {"max_abs_diff", max_diff},
                {"within_tolerance", max_diff <= tolerance}};
}

namespace {

json presentation_report_json(const PresentationReport& report) {
    return json{{"m", report.m},
                {"n", report.n},
                {"rank", report.rank},
                {"expected_rank", report.expected_rank},
                {"relations_vanish", report.relations_vanish},
                {"nonvanishing_relations", report.nonvanishing_relations},
                {"surjective", report.surjective},
                {"table_mismatches", report.table_mismatches},
                {"radical_generator_matches", report.radical_generator_matches},
                {"ok", report.ok()}};
}

}  // namespace

json presentation_json(const RadfordPresentation& pres, const PresentationReport& report) {
    json out;
    out["variables"] = pres.variable_names();
    out["relations"] = pres.relation_strings();
    json basis = json::array();
    for (const RPoly& b : pres.basis_monomials()) basis.push_back(b.to_string());
    out["basis"] = basis;
    out["verification"] = presentation_report_json(report);
    return out;
}

json g0_presentation_json(const RadfordG0Presentation& pres, const PresentationReport& report) {
    json out;
    out["variables"] = pres.variable_names();
    out["relations"] = pres.relation_strings();
    json basis = json::array();
    for (const RPoly& b : pres.basis_monomials()) basis.push_back(b.to_string());
    out["basis"] = basis;
    out["verification"] = presentation_report_json(report);
    return out;
}

json oracle_json(const Datum& d, const OracleReport& report) {
    json mismatches = json::array();
    for (const OracleMismatch& m : report.mismatches)
        mismatches.push_back(json{{"left", m.left},
                                  {"right", m.right},
                                  {"expected", m.expected},
                                  {"actual", m.actual}});
    return json{{"datum", datum_to_json(d)},
                {"pairs", report.pairs},
                {"mismatches", mismatches},
                {"elapsed_ms", report.elapsed_ms},
                {"ok", report.ok()}};
}

}  // namespace greenring
