// Command-line front end: loads a datum (file or --radford shorthand), runs
// one analysis, and prints a text or JSON report.
//
// Exit codes: 0 success / verification clean, 1 verification mismatch,
// 2 input or usage errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "greenring/io.hpp"

using namespace greenring;

namespace {

struct DatumOptions {
    std::string datum_file;
    std::string radford_arg;

    Datum resolve() const {
        if (!radford_arg.empty()) {
            auto comma = radford_arg.find(',');
            if (comma == std::string::npos)
                throw Error(ErrorKind::ParseError, "--radford expects m,n");
            long long m = 0, n = 0;
            try {
                m = std::stoll(radford_arg.substr(0, comma));
                n = std::stoll(radford_arg.substr(comma + 1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "--radford expects integers m,n");
            }
            return Datum::radford(m, n);
        }
        if (!datum_file.empty()) return load_datum_file(datum_file);
        throw Error(ErrorKind::ParseError, "no datum given: use --datum FILE or --radford m,n");
    }

    std::pair<long long, long long> radford_params() const {
        Datum d = resolve();
        if (d.num_factors() != 1 || d.raw().g[0] != 1 ||
            d.raw().chi[0] != mod_reduce(-d.r(), d.group_order()))
            throw Error(ErrorKind::InvalidParameters,
                        "this command needs a Radford datum (use --radford m,n)");
        return {d.r(), d.n()};
    }
};

void add_datum_options(CLI::App* cmd, DatumOptions& opts) {
    cmd->fallthrough();
    auto* file = cmd->add_option("--datum", opts.datum_file, "datum file (JSON)");
    auto* rad = cmd->add_option("--radford", opts.radford_arg, "Radford shorthand m,n");
    file->excludes(rad);
}

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Green rings of pointed rank one Hopf algebras of "
                 "non-nilpotent type"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable report on stdout");
    double tolerance = 1e-9;
    app.add_option("--tolerance", tolerance, "numeric tolerance for FPdim checks");

    DatumOptions opts;
    std::vector<std::string> mul_args;

    CLI::App* c_validate = app.add_subcommand("validate", "validate a datum and print derived data");
    add_datum_options(c_validate, opts);
    CLI::App* c_basis = app.add_subcommand("basis", "list the indecomposable basis");
    add_datum_options(c_basis, opts);
    CLI::App* c_mul = app.add_subcommand("mul", "multiply two elements");
    add_datum_options(c_mul, opts);
    c_mul->add_option("elements", mul_args, "two elements, e.g. \"M(2,0)\" \"P[1]\"")
        ->expected(2);
    CLI::App* c_table = app.add_subcommand("table", "full multiplication table");
    add_datum_options(c_table, opts);
    CLI::App* c_cartan = app.add_subcommand("cartan", "Cartan matrix in block form");
    add_datum_options(c_cartan, opts);
    CLI::App* c_radical = app.add_subcommand("radical", "Jacobson radical report");
    add_datum_options(c_radical, opts);
    CLI::App* c_idem = app.add_subcommand("idempotents", "bounded idempotent search");
    add_datum_options(c_idem, opts);
    CLI::App* c_fusion = app.add_subcommand("fusion", "fusion-ring axiom checks");
    add_datum_options(c_fusion, opts);
    CLI::App* c_fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimension table");
    add_datum_options(c_fpdim, opts);
    CLI::App* c_pres = app.add_subcommand("radford-presentation",
                                          "generators/relations presentation of r(H)");
    add_datum_options(c_pres, opts);
    CLI::App* c_g0pres = app.add_subcommand("g0-presentation",
                                            "generators/relations presentation of G_0(H)");
    add_datum_options(c_g0pres, opts);
    CLI::App* c_oracle = app.add_subcommand("oracle-verify",
                                            "verify all products against the matrix oracle");
    add_datum_options(c_oracle, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) {
            Datum d = opts.resolve();
            json doc = datum_summary_json(d);
            std::string text = "valid non-nilpotent datum\n";
            text += "  n = " + std::to_string(d.n()) + ", r = " + std::to_string(d.r()) +
                    ", |G| = " + std::to_string(d.group_order()) +
                    ", dim H = " + std::to_string(d.n() * d.group_order()) + "\n";
            text += "  |Omega_0| = " + std::to_string(d.omega0().size()) +
                    ", orbits: " + std::to_string(d.orbit_reps0().size()) + " + " +
                    std::to_string(d.orbit_reps1().size()) + "\n";
            text += "  basis size = " + doc["basis_size"].dump() + "\n";
            emit(doc, as_json, text);
            return 0;
        }
        if (c_basis->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            std::string text;
            for (const Label& l : ring.catalog().basis()) {
                text += ring.catalog().to_string(l);
                text += "  dim=" + std::to_string(ring.catalog().dim(l));
                text += ring.catalog().projective(l) ? "  projective\n" : "\n";
            }
            emit(basis_json(ring), as_json, text);
            return 0;
        }
        if (c_mul->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            RingElement x = ring.parse(mul_args[0]);
            RingElement y = ring.parse(mul_args[1]);
            RingElement product = x * y;
            emit(mul_json(ring, x, y, product), as_json, ring.to_string(product) + "\n");
            return 0;
        }
        if (c_table->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            std::string text;
            const Catalog& cat = ring.catalog();
            for (std::size_t p = 0; p < cat.size(); ++p)
                for (std::size_t q = 0; q < cat.size(); ++q) {
                    RingElement prod(&ring, std::map<std::size_t, Int>(ring.basis_product(p, q)));
                    text += cat.to_string(cat.label_at(p)) + " * " +
                            cat.to_string(cat.label_at(q)) + " = " + ring.to_string(prod) + "\n";
                }
            emit(table_json(ring), as_json, text);
            return 0;
        }
        if (c_cartan->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            Grothendieck g0(ring);
            CartanMatrix cm = g0.cartan_matrix();
            std::string text;
            for (std::size_t i = 0; i < cm.entries.rows(); ++i) {
                for (std::size_t j = 0; j < cm.entries.cols(); ++j) {
                    if (j) text += ' ';
                    text += cm.entries.at(i, j).str();
                }
                text += '\n';
            }
            emit(cartan_json(g0), as_json, text);
            return 0;
        }
        if (c_radical->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            Grothendieck g0(ring);
            PrincipalGeneratorReport report = principal_generator_check(g0);
            bool squares_ok = true;
            for (const RingElement& x : report.radical.elements(ring))
                squares_ok = squares_ok && (x * x).is_zero();
            std::size_t expected_rank =
                static_cast<std::size_t>(d.n() - 1) * d.orbit_reps0().size();
            json doc = radical_json(ring, report);
            doc["squares_to_zero"] = squares_ok;
            std::string text = "radical rank = " + std::to_string(report.radical.rank()) +
                               " (expected " + std::to_string(expected_rank) + ")\n";
            text += "principal generator = " + ring.to_string(report.generator) + "\n";
            text += std::string("ideal lattice matches radical: ") +
                    (report.matches ? "yes" : "NO") + "\n";
            text += std::string("lattice basis squares to zero: ") +
                    (squares_ok ? "yes" : "NO") + "\n";
            emit(doc, as_json, text);
            bool ok = report.matches && squares_ok && report.radical.rank() == expected_rank;
            return ok ? 0 : 1;
        }
        if (c_idem->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            IdempotentSearchReport report = bounded_idempotent_search(ring);
            std::string text = "candidates tested: " + std::to_string(report.candidates_tested) +
                               " (coefficients in {-1,0,1}, support <= " +
                               std::to_string(report.max_support) + ")\n";
            text += "idempotents found: 0, 1";
            for (const std::string& s : report.nontrivial) text += ", " + s;
            text += "\n";
            emit(idempotents_json(report), as_json, text);
            return report.nontrivial.empty() && report.unit_found ? 0 : 1;
        }
        if (c_fusion->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            StableRing st(ring);
            FusionReport report = st.fusion_axioms_check();
            std::string text;
            for (const FusionCheck& c : report.checks) {
                text += c.name + std::string(": ") + (c.pass ? "pass" : "FAIL") + "\n";
                if (!c.pass) text += "  witness: " + c.witness + "\n";
            }
            emit(fusion_json(report), as_json, text);
            return report.all_pass() ? 0 : 1;
        }
        if (c_fpdim->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            StableRing st(ring);
            json doc = fpdim_json(st, tolerance);
            bool dickson_ok =
                DicksonPoly::dickson(d.n()).evaluate(
                    ring.a(), ring.from_label(ring.catalog().m_label(2, 0))) ==
                ring.from_label(ring.catalog().m_label(d.n(), 0));
            doc["dickson_identity"] = dickson_ok;
            std::string text;
            double max_diff = 0.0;
            for (const FPDimEntry& e : st.fpdim_table()) {
                text += e.label + ": eigen=" + format_double(e.eigen) +
                        " closed=" + format_double(e.closed) +
                        " |diff|=" + format_double(e.abs_diff) + "\n";
                max_diff = std::max(max_diff, e.abs_diff);
            }
            text += std::string("dickson identity: ") + (dickson_ok ? "holds" : "FAILS") + "\n";
            emit(doc, as_json, text);
            return max_diff <= tolerance && dickson_ok ? 0 : 1;
        }
        if (c_pres->parsed()) {
            auto [m, n] = opts.radford_params();
            RadfordPresentation pres(m, n);
            PresentationReport report = verify_presentation(m, n);
            std::string text = "variables:";
            for (const std::string& v : pres.variable_names()) text += " " + v;
            text += "\nrelations:\n";
            for (const std::string& r : pres.relation_strings()) text += "  " + r + "\n";
            text += "rank " + std::to_string(report.rank) + " / expected " +
                    std::to_string(report.expected_rank) + "\n";
            text += std::string("verification: ") + (report.ok() ? "ok" : "MISMATCH") + "\n";
            emit(presentation_json(pres, report), as_json, text);
            return report.ok() ? 0 : 1;
        }
        if (c_g0pres->parsed()) {
            auto [m, n] = opts.radford_params();
            RadfordG0Presentation pres(m, n);
            PresentationReport report = verify_g0_presentation(m, n);
            std::string text = "variables:";
            for (const std::string& v : pres.variable_names()) text += " " + v;
            text += "\nrelations:\n";
            for (const std::string& r : pres.relation_strings()) text += "  " + r + "\n";
            text += "rank " + std::to_string(report.rank) + " / expected " +
                    std::to_string(report.expected_rank) + "\n";
            text += std::string("verification: ") + (report.ok() ? "ok" : "MISMATCH") + "\n";
            emit(g0_presentation_json(pres, report), as_json, text);
            return report.ok() ? 0 : 1;
        }
        if (c_oracle->parsed()) {
            Datum d = opts.resolve();
            GreenRing ring(d);
            Oracle oracle(ring);
            OracleReport report = oracle.verify_structure_constants();
            std::string text = std::to_string(report.mismatches.size()) + " mismatches / " +
                               std::to_string(report.pairs) + " pairs (" +
                               format_double(report.elapsed_ms) + " ms)\n";
            for (const OracleMismatch& mm : report.mismatches)
                text += "  " + mm.left + " * " + mm.right + ": ring says " + mm.expected +
                        ", oracle says " + mm.actual + "\n";
            emit(oracle_json(d, report), as_json, text);
            return report.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
