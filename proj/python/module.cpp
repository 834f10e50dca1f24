// Python bindings for the Green ring toolkit. Reports are returned as plain
// python dicts/lists mirroring the CLI's --json documents.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greenring/io.hpp"

namespace py = pybind11;
using namespace greenring;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

Datum datum_from_dict(const py::dict& data) {
    GroupDatum raw;
    if (data.contains("radford")) {
        py::dict r = data["radford"].cast<py::dict>();
        return Datum::radford(r["m"].cast<long long>(), r["n"].cast<long long>());
    }
    raw.cyclic_orders = data["cyclic_orders"].cast<std::vector<long long>>();
    raw.chi = data["chi"].cast<std::vector<long long>>();
    raw.g = data["g"].cast<std::vector<long long>>();
    return Datum::validate(raw);
}

// Owns the ring and the derived structures; python-facing operations take and
// return label/element strings.
class Session {
public:
    explicit Session(const Datum& d) : ring_(d), g0_(ring_), stable_(ring_) {}

    py::object summary() const { return json_to_py(datum_summary_json(ring_.datum())); }

    std::vector<std::string> basis() const {
        std::vector<std::string> out;
        for (const Label& l : ring_.catalog().basis())
            out.push_back(ring_.catalog().to_string(l));
        return out;
    }

    std::string mul(const std::string& x, const std::string& y) const {
        return ring_.to_string(ring_.parse(x) * ring_.parse(y));
    }

    std::string add(const std::string& x, const std::string& y) const {
        return ring_.to_string(ring_.parse(x) + ring_.parse(y));
    }

    std::string dualize(const std::string& x) const {
        return ring_.to_string(ring_.dualize(ring_.parse(x)));
    }

    std::string delta(const std::string& label) const {
        return ring_.to_string(ring_.delta(ring_.catalog().parse(label)));
    }

    std::string bilinear_form(const std::string& x, const std::string& y) const {
        return ring_.bilinear_form(ring_.parse(x), ring_.parse(y)).str();
    }

    std::string dimension(const std::string& x) const {
        return ring_.dimension(ring_.parse(x)).str();
    }

    bool is_idempotent_element(const std::string& x) const {
        return is_idempotent(ring_.parse(x));
    }

    std::string phi(const std::string& x) const {
        return g0_.to_string(g0_.phi(ring_.parse(x)));
    }

    py::object table() const { return json_to_py(table_json(ring_)); }
    py::object cartan() const { return json_to_py(cartan_json(g0_)); }

    py::object radical() const {
        PrincipalGeneratorReport report = principal_generator_check(g0_);
        return json_to_py(radical_json(ring_, report));
    }

    py::object idempotent_search(int coeff_bound, int max_support) const {
        return json_to_py(
            idempotents_json(bounded_idempotent_search(ring_, coeff_bound, max_support)));
    }

    py::object fusion() const { return json_to_py(fusion_json(stable_.fusion_axioms_check())); }

    py::object fpdim(double tolerance) const {
        return json_to_py(fpdim_json(stable_, tolerance));
    }

    double fpdim_eigen(const std::string& label) const {
        return stable_.fpdim_eigen(ring_.catalog().parse(label));
    }

    double fpdim_closed(const std::string& label) const {
        return stable_.fpdim_closed(ring_.catalog().parse(label));
    }

    py::object oracle_verify() const {
        Oracle oracle(ring_);
        return json_to_py(oracle_json(ring_.datum(), oracle.verify_structure_constants()));
    }

private:
    GreenRing ring_;
    Grothendieck g0_;
    StableRing stable_;
};

}  // namespace

PYBIND11_MODULE(greenring, m) {
    m.doc() = "Exact Green ring toolkit for pointed rank one Hopf algebras of "
              "non-nilpotent type";

    py::register_exception<Error>(m, "GreenRingError");

    py::class_<Datum>(m, "Datum")
        .def_property_readonly("n", &Datum::n)
        .def_property_readonly("r", &Datum::r)
        .def_property_readonly("group_order", &Datum::group_order)
        .def("__repr__", [](const Datum& d) {
            return "<Datum n=" + std::to_string(d.n()) + " r=" + std::to_string(d.r()) +
                   " |G|=" + std::to_string(d.group_order()) + ">";
        });

    m.def("radford", &Datum::radford, py::arg("m"), py::arg("n"),
          "Radford datum: cyclic group of order m*n");
    m.def("validate", &datum_from_dict, py::arg("data"),
          "validate a datum given as a dict with cyclic_orders/chi/g (or radford: {m,n})");

    py::class_<Session>(m, "Session")
        .def(py::init<const Datum&>(), py::arg("datum"))
        .def("summary", &Session::summary)
        .def("basis", &Session::basis)
        .def("mul", &Session::mul, py::arg("x"), py::arg("y"))
        .def("add", &Session::add, py::arg("x"), py::arg("y"))
        .def("dualize", &Session::dualize, py::arg("x"))
        .def("delta", &Session::delta, py::arg("label"))
        .def("bilinear_form", &Session::bilinear_form, py::arg("x"), py::arg("y"))
        .def("dimension", &Session::dimension, py::arg("x"))
        .def("is_idempotent", &Session::is_idempotent_element, py::arg("x"))
        .def("phi", &Session::phi, py::arg("x"))
        .def("table", &Session::table)
        .def("cartan", &Session::cartan)
        .def("radical", &Session::radical)
        .def("idempotent_search", &Session::idempotent_search,
             py::arg("coeff_bound") = 1, py::arg("max_support") = 3)
        .def("fusion", &Session::fusion)
        .def("fpdim", &Session::fpdim, py::arg("tolerance") = 1e-9)
        .def("fpdim_eigen", &Session::fpdim_eigen, py::arg("label"))
        .def("fpdim_closed", &Session::fpdim_closed, py::arg("label"))
        .def("oracle_verify", &Session::oracle_verify);

    m.def("verify_presentation",
          [](long long mm, long long nn) {
              RadfordPresentation pres(mm, nn);
              return json_to_py(presentation_json(pres, verify_presentation(mm, nn)));
          },
          py::arg("m"), py::arg("n"));
    m.def("verify_g0_presentation",
          [](long long mm, long long nn) {
              RadfordG0Presentation pres(mm, nn);
              return json_to_py(g0_presentation_json(pres, verify_g0_presentation(mm, nn)));
          },
          py::arg("m"), py::arg("n"));
}
