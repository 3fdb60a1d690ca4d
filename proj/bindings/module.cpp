// Python bindings for the partition toolkit. Arbitrary-precision series
// coefficients cross the boundary as native python ints.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "initrep/bijection.hpp"
#include "initrep/identities.hpp"
#include "initrep/modular.hpp"
#include "initrep/selftest.hpp"

namespace py = pybind11;
using namespace initrep;

namespace {

py::object to_py_int(const Coeff& c) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::object mismatch_to_py(const std::optional<CoefficientMismatch>& m) {
    if (!m)
        return py::none();
    py::dict d;
    d["left_form"] = m->left_name;
    d["right_form"] = m->right_name;
    d["exponent"] = m->exponent;
    d["left"] = to_py_int(m->left);
    d["right"] = to_py_int(m->right);
    return d;
}

PartitionClass class_from_name(const std::string& name) {
    auto cls = partition_class_from_string(name);
    if (!cls)
        throw std::invalid_argument("unknown partition class '" + name + "'");
    return *cls;
}

} // namespace

PYBIND11_MODULE(initrep, m) {
    m.doc() = "Partitions with initial k-repetitions: bijection, k-strips, "
              "k-modular diagrams, and truncated q-series identity checks";

    py::register_exception<NotAPartition>(m, "NotAPartitionError", PyExc_ValueError);
    py::register_exception<PartitionParseError>(m, "PartitionParseError", PyExc_ValueError);
    py::register_exception<StripNotRemovable>(m, "StripNotRemovableError", PyExc_ValueError);
    py::register_exception<MalformedDecomposition>(m, "MalformedDecompositionError",
                                                   PyExc_ValueError);
    py::register_exception<DomainViolation>(m, "DomainViolationError", PyExc_ValueError);
    py::register_exception<TruncationMismatch>(m, "TruncationMismatchError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceededError", PyExc_ValueError);
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflowError", PyExc_OverflowError);

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init([](const std::vector<Part>& parts) { return make_partition(parts); }),
             py::arg("parts"))
        .def_static("parse", [](const std::string& text) { return parse_partition(text); },
                    py::arg("text"))
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("weight", &Partition::weight)
        .def("__len__", &Partition::size)
        .def("__str__", [](const Partition& p) { return format_partition(p); })
        .def("__repr__",
             [](const Partition& p) { return "Partition('" + format_partition(p) + "')"; })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const Partition& a, const Partition& b) { return a < b; },
             py::is_operator())
        .def("__hash__",
             [](const Partition& p) { return py::hash(py::str(format_partition(p))); });

    m.def("parse", [](const std::string& text) { return parse_partition(text); }, py::arg("text"));
    m.def("format", &format_partition, py::arg("partition"), py::arg("compress_runs") = true);
    m.def("conjugate", &conjugate, py::arg("partition"));
    m.def("multiplicity", &multiplicity, py::arg("partition"), py::arg("value"));
    m.def("is_repetition_bounded", &is_repetition_bounded, py::arg("partition"), py::arg("k"));
    m.def("has_initial_k_repetitions", &has_initial_k_repetitions, py::arg("partition"),
          py::arg("k"));
    m.def("has_strong_initial_repetitions", &has_strong_initial_repetitions, py::arg("partition"),
          py::arg("k"));
    m.def("is_k_flat", &is_k_flat, py::arg("partition"), py::arg("k"));
    m.def("largest_k_repeated_part", &largest_k_repeated_part, py::arg("partition"), py::arg("k"));

    py::class_<ModularColumn>(m, "ModularColumn")
        .def_readonly("quotient", &ModularColumn::quotient)
        .def_readonly("residue", &ModularColumn::residue)
        .def("__repr__", [](const ModularColumn& c) {
            return "ModularColumn(quotient=" + std::to_string(c.quotient) +
                   ", residue=" + std::to_string(c.residue) + ")";
        });
    py::class_<KModularDiagram>(m, "KModularDiagram")
        .def_readonly("k", &KModularDiagram::k)
        .def_readonly("columns", &KModularDiagram::columns)
        .def("render", [](const KModularDiagram& d) { return render_text(d); })
        .def("to_partition", [](const KModularDiagram& d) { return to_partition(d); });
    m.def("k_modular_diagram", &k_modular_diagram, py::arg("partition"), py::arg("k"));
    m.def("render_text", &render_text, py::arg("diagram"));

    py::class_<RemovableStrip>(m, "RemovableStrip")
        .def_readonly("length", &RemovableStrip::length)
        .def_readonly("count", &RemovableStrip::count)
        .def("__repr__", [](const RemovableStrip& s) {
            return "RemovableStrip(length=" + std::to_string(s.length) +
                   ", count=" + std::to_string(s.count) + ")";
        });
    py::class_<StripDecomposition>(m, "StripDecomposition")
        .def(py::init([](Part k, const Partition& pi, const Partition& delta) {
                 return StripDecomposition{k, pi, delta};
             }),
             py::arg("k"), py::arg("pi"), py::arg("delta"))
        .def_readonly("k", &StripDecomposition::k)
        .def_readonly("pi", &StripDecomposition::pi)
        .def_readonly("delta", &StripDecomposition::delta);
    m.def("removable_strips", &removable_strips, py::arg("partition"), py::arg("k"));
    m.def("remove_strip", &remove_strip, py::arg("partition"), py::arg("k"), py::arg("length"));
    m.def("decompose", &decompose, py::arg("partition"), py::arg("k"));
    m.def("insert_strips", &insert_strips, py::arg("decomposition"));
    m.def("vector_add", &vector_add, py::arg("pi"), py::arg("delta"));

    py::class_<BijectionTrace>(m, "BijectionTrace")
        .def_readonly("k", &BijectionTrace::k)
        .def_readonly("lambda_", &BijectionTrace::lambda)
        .def_readonly("lambda_conj", &BijectionTrace::lambda_conj)
        .def_readonly("pi", &BijectionTrace::pi)
        .def_readonly("delta", &BijectionTrace::delta)
        .def_readonly("alpha", &BijectionTrace::alpha)
        .def_readonly("alpha_conj", &BijectionTrace::alpha_conj);
    m.def("forward", &forward, py::arg("partition"), py::arg("k"), py::arg("strict") = true);
    m.def("inverse", &inverse, py::arg("partition"), py::arg("k"), py::arg("strict") = true);
    m.def("trace", &trace, py::arg("partition"), py::arg("k"));

    py::class_<Series>(m, "Series")
        .def_property_readonly("trunc", &Series::trunc)
        .def("coeff", [](const Series& s, std::int64_t n) { return to_py_int(s.coeff(n)); },
             py::arg("n"))
        .def("coeffs",
             [](const Series& s) {
                 py::list out;
                 for (const Coeff& c : s.coeffs())
                     out.append(to_py_int(c));
                 return out;
             })
        .def("table", &coefficient_table)
        .def("__eq__", [](const Series& a, const Series& b) { return a == b; }, py::is_operator());
    m.def("partition_generating_series", &partition_generating_series, py::arg("trunc"));
    m.def("identity1_sides", &identity1_sides, py::arg("k"), py::arg("trunc"));
    m.def("identity2_sides", &identity2_sides, py::arg("k"), py::arg("m"), py::arg("trunc"));
    py::class_<Identity3Forms>(m, "Identity3Forms")
        .def_readonly("sum_form", &Identity3Forms::sum_form)
        .def_readonly("middle_form", &Identity3Forms::middle_form)
        .def_readonly("rr_product_form", &Identity3Forms::rr_product_form)
        .def_readonly("final_product_form", &Identity3Forms::final_product_form);
    m.def("identity3_forms", &identity3_forms, py::arg("k"), py::arg("trunc"));

    m.def(
        "enumerate_partitions",
        [](std::int64_t n, std::int64_t cap) { return enumerate_partitions(n, cap); },
        py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
    m.def(
        "count_class",
        [](std::int64_t n, Part k, const std::string& cls, std::optional<std::int64_t> m,
           std::int64_t cap) {
            PartitionClass parsed = class_from_name(cls);
            if (parsed == PartitionClass::InitialRepsCapped && !m)
                throw std::invalid_argument("class initial-reps-capped requires m");
            if (parsed != PartitionClass::InitialRepsCapped && m)
                throw std::invalid_argument("m only applies to class initial-reps-capped");
            return count_class(n, k, parsed, m.value_or(0), cap);
        },
        py::arg("n"), py::arg("k"), py::arg("cls"), py::arg("m") = py::none(),
        py::arg("cap") = kDefaultEnumerationCap);

    py::class_<OracleCheck>(m, "OracleCheck")
        .def_readonly("form_name", &OracleCheck::form_name)
        .def_property_readonly("class_name",
                               [](const OracleCheck& c) { return to_string(c.cls); })
        .def_readonly("agrees", &OracleCheck::agrees)
        .def_property_readonly("mismatch",
                               [](const OracleCheck& c) { return mismatch_to_py(c.mismatch); });
    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("identity_id", &IdentityReport::identity_id)
        .def_readonly("k", &IdentityReport::k)
        .def_property_readonly("m",
                               [](const IdentityReport& r) {
                                   return r.m ? py::cast(*r.m) : py::none().cast<py::object>();
                               })
        .def_readonly("trunc", &IdentityReport::trunc)
        .def_readonly("form_names", &IdentityReport::form_names)
        .def_readonly("series_equal", &IdentityReport::series_equal)
        .def_property_readonly(
            "first_mismatch",
            [](const IdentityReport& r) { return mismatch_to_py(r.first_mismatch); })
        .def_readonly("oracle_limit", &IdentityReport::oracle_limit)
        .def_readonly("oracle_checks", &IdentityReport::oracle_checks)
        .def_property_readonly("holds", &IdentityReport::holds)
        .def("__repr__", [](const IdentityReport& r) {
            return "IdentityReport(identity=" + std::to_string(r.identity_id) +
                   ", k=" + std::to_string(r.k) + ", trunc=" + std::to_string(r.trunc) +
                   ", holds=" + (r.holds() ? "True" : "False") + ")";
        });
    m.def(
        "verify_identity",
        [](int identity_id, Part k, std::int64_t limit, std::optional<std::int64_t> m,
           std::int64_t oracle_cap) { return verify_identity(identity_id, k, m, limit, oracle_cap); },
        py::arg("identity"), py::arg("k"), py::arg("limit"), py::arg("m") = py::none(),
        py::arg("oracle_cap") = kDefaultOracleCap);

    py::class_<SelftestCheck>(m, "SelftestCheck")
        .def_readonly("name", &SelftestCheck::name)
        .def_readonly("cases", &SelftestCheck::cases)
        .def_readonly("passed", &SelftestCheck::passed)
        .def_readonly("counterexample", &SelftestCheck::counterexample);
    py::class_<SelftestReport>(m, "SelftestReport")
        .def_readonly("passed", &SelftestReport::passed)
        .def_readonly("checks", &SelftestReport::checks);
    m.def("run_selftest", &run_selftest, py::arg("max_n"), py::arg("max_k"),
          py::arg("cap") = kDefaultEnumerationCap);

    m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;
    m.attr("DEFAULT_ORACLE_CAP") = kDefaultOracleCap;
}
