#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qpart/identities.hpp"
#include "qpart/mseries.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"
#include "qpart/statistics.hpp"
#include "qpart/weights.hpp"

namespace py = pybind11;
using namespace qpart;

namespace {

std::vector<coeff_t> as_list(const Series& s) { return s.coeffs(); }

Params params_from(const std::string& text) {
    return text.empty() ? Params{} : Params::parse(text);
}

std::string ferrers_ascii(const Partition& p) {
    std::ostringstream out;
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) out << (j ? " ." : ".");
        out << '\n';
    }
    return out.str();
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict d;
    d["id"] = rep.id;
    d["order"] = rep.order;
    d["status"] = rep.verified ? "verified" : "failed";
    if (rep.first_mismatch) {
        py::dict m;
        m["exponent"] = rep.first_mismatch->exponent;
        m["lhs"] = rep.first_mismatch->lhs;
        m["rhs"] = rep.first_mismatch->rhs;
        d["first_mismatch"] = m;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["ms"] = rep.millis;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact partition enumeration, q-series expansion and identity verification";

    py::register_exception<OverflowError>(m, "CoefficientOverflowError", PyExc_OverflowError);

    py::class_<Partition>(m, "Partition")
        .def(py::init([](const std::vector<int>& parts) {
                 return Partition::from_parts(parts);
             }),
             py::arg("parts") = std::vector<int>{})
        .def_property_readonly("parts",
                               [](const Partition& p) { return p.parts(); })
        .def_property_readonly("norm", &Partition::norm)
        .def_property_readonly("num_parts",
                               [](const Partition& p) { return p.num_parts(); })
        .def("conjugate", [](const Partition& p) { return conjugate(p); })
        .def("ferrers", &ferrers_ascii)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__len__", &Partition::num_parts)
        .def("__repr__", [](const Partition& p) {
            return "Partition([" + p.to_string() + "])";
        });

    py::class_<ConstraintSpec>(m, "ConstraintSpec")
        .def(py::init<>())
        .def_readwrite("min_gap", &ConstraintSpec::min_gap)
        .def_readwrite("max_gap", &ConstraintSpec::max_gap)
        .def_readwrite("min_smallest", &ConstraintSpec::min_smallest)
        .def_readwrite("max_smallest", &ConstraintSpec::max_smallest)
        .def_readwrite("exact_parts", &ConstraintSpec::exact_parts)
        .def_readwrite("max_parts", &ConstraintSpec::max_parts)
        .def_static("preset", &ConstraintSpec::preset, py::arg("name"))
        .def_static("parse", &ConstraintSpec::parse, py::arg("text"))
        .def_static("exact_parts_set", &ConstraintSpec::exact_parts_set,
                    py::arg("M"), py::arg("k"), py::arg("m"))
        .def_static("at_most_parts_set", &ConstraintSpec::at_most_parts_set,
                    py::arg("M"), py::arg("k"), py::arg("m"))
        .def_static("distinct_exact", &ConstraintSpec::distinct_exact, py::arg("num_parts"))
        .def(py::self == py::self)
        .def("__repr__", [](const ConstraintSpec& s) {
            return "ConstraintSpec(" + s.to_json().dump() + ")";
        });

    m.def("make_partition",
          [](const std::vector<int>& parts) { return Partition::from_parts(parts); },
          py::arg("parts"));
    m.def("conjugate", &conjugate, py::arg("partition"));
    m.def("pointwise_add", &pointwise_add, py::arg("first"), py::arg("second"));
    m.def("min_partition", &min_partition, py::arg("num_parts"), py::arg("min_smallest"),
          py::arg("min_gap"));
    m.def("member", &member, py::arg("spec"), py::arg("partition"));
    m.def("enumerate_by_norm", &enumerate_by_norm, py::arg("spec"), py::arg("n"));
    m.def("count_by_norm", &count_by_norm, py::arg("spec"), py::arg("n"));
    m.def(
        "enumerate_by_statistic",
        [](const ConstraintSpec& spec, const std::string& stat, int value) {
            return enumerate_by_statistic(spec, parse_statistic(stat), value);
        },
        py::arg("spec"), py::arg("stat"), py::arg("value"));

    m.def(
        "statistic",
        [](const std::string& tag, const Partition& p) {
            return statistic(parse_statistic(tag), p);
        },
        py::arg("tag"), py::arg("partition"));
    m.def("odd_index_sum", &odd_index_sum, py::arg("partition"));
    m.def("even_index_sum", &even_index_sum, py::arg("partition"));
    m.def("crank", &crank, py::arg("partition"));
    m.def("durfee", &durfee, py::arg("partition"));
    m.def("parity", &parity, py::arg("n"));
    m.def(
        "count_crank_class",
        [](int n, const std::string& rel, int threshold) {
            return count_crank_class(n, parse_crank_relation(rel), threshold);
        },
        py::arg("n"), py::arg("relation"), py::arg("threshold"));

    m.def(
        "weight",
        [](const std::string& tag, const Partition& p) {
            return weight(WeightId::parse(tag), p);
        },
        py::arg("tag"), py::arg("partition"));
    m.def(
        "decoration",
        [](const Partition& p) {
            DecorationCount d = decoration(p);
            return py::make_tuple(d.a, d.b, d.c, d.d);
        },
        py::arg("partition"));
    m.def("weight_identity_check", &weight_identity_check, py::arg("partition"));

    m.def(
        "product_form",
        [](const std::string& name, int order, const std::string& params) {
            return as_list(product_form(name, params_from(params), order));
        },
        py::arg("name"), py::arg("order"), py::arg("params") = "");
    m.def(
        "sum_form",
        [](const std::string& name, int order, const std::string& params) {
            return as_list(sum_form(name, params_from(params), order));
        },
        py::arg("name"), py::arg("order"), py::arg("params") = "");
    m.def("unrestricted_odd_index_series",
          [](int order) { return as_list(unrestricted_odd_index_series(order)); },
          py::arg("order"));

    py::class_<MSeries>(m, "MSeries")
        .def_property_readonly("order", &MSeries::order)
        .def("coeff", [](const MSeries& s, const Exp4& e) { return s.coeff(e); },
             py::arg("exponents"))
        .def("terms",
             [](const MSeries& s) {
                 std::vector<std::pair<Exp4, coeff_t>> out = s.terms();
                 return out;
             })
        .def("specialize",
             [](const MSeries& s, const Exp4& exps, int order) {
                 return as_list(specialize(s, exps, order));
             },
             py::arg("q_exponents"), py::arg("order"))
        .def(py::self == py::self)
        .def("__repr__", [](const MSeries& s) {
            return "MSeries(order=" + std::to_string(s.order()) + ", terms=" +
                   std::to_string(s.terms().size()) + ")";
        });

    m.def(
        "boulet",
        [](const std::string& name, int order) { return boulet(parse_boulet(name), order); },
        py::arg("form"), py::arg("order"));

    m.def("registry_ids", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Identity& ident : registry()) out.emplace_back(ident.id, ident.description);
        return out;
    });
    m.def(
        "verify",
        [](const std::string& id, int order) {
            auto found = find_identities(id);
            if (found.size() != 1)
                throw std::invalid_argument("expected exactly one identity named '" + id +
                                            "'");
            return report_dict(verify(found.front(), order));
        },
        py::arg("identity"), py::arg("order"));
    m.def(
        "verify_family",
        [](const std::string& family, const std::string& params, int order) {
            return report_dict(verify(instantiate_family(family, params_from(params)), order));
        },
        py::arg("family"), py::arg("params"), py::arg("order"));
    m.def(
        "verify_all",
        [](int order) {
            py::list out;
            for (const VerificationReport& rep : verify_all(order))
                out.append(report_dict(rep));
            return out;
        },
        py::arg("order"));
}
