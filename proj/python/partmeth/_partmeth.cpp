#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partmeth/classes.hpp"
#include "partmeth/emit.hpp"
#include "partmeth/genfuncs.hpp"
#include "partmeth/named.hpp"

namespace py = pybind11;
using namespace partmeth;

namespace {

// Big values cross the boundary as decimal strings; __init__.py turns them into int and Fraction.
std::vector<std::string> strings(const std::vector<Rational>& v)
{
    std::vector<std::string> out;
    for (auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Family family(const std::string& name)
{
    if (name == "cosecant")
        return Family::Cosecant;
    if (name == "secant")
        return Family::Secant;
    if (name == "reciprocal-log" || name == "reciprocal_log")
        return Family::ReciprocalLog;
    throw py::value_error("unknown family: " + name);
}

EnumerationOrder order(const std::string& name)
{
    if (name == "brcp")
        return EnumerationOrder::BRCP;
    if (name == "revlex")
        return EnumerationOrder::ReverseLex;
    if (name == "ascending")
        return EnumerationOrder::Ascending;
    throw py::value_error("unknown order: " + name);
}

}  // namespace

PYBIND11_MODULE(_partmeth, m)
{
    m.doc() = "Partition enumeration and partition-sum generating functions";

    m.def("count_partitions", [](int k) { return count_partitions(k).get_str(); }, py::arg("k"));
    m.def("count_distinct", [](int k) { return std::to_string(count_class(k, PartitionClass::discrete())); }, py::arg("k"));
    m.def(
        "partitions",
        [](int k, const std::string& ord) {
            std::vector<std::vector<int>> out;
            enumerate(k, order(ord), [&](const PartitionView& v) { out.push_back(v.to_partition().parts()); });
            return out;
        },
        py::arg("k"), py::arg("order") = "brcp");

    m.def("family_table", [](const std::string& f, int kmax) { return strings(family_table(family(f), kmax)); },
          py::arg("family"), py::arg("kmax"));
    m.def("q_poly", [](int k) { return q_poly(k).str(); }, py::arg("k"));
    m.def("p_poly", [](int k) { return p_poly(k).str(); }, py::arg("k"));
    m.def("q_number", [](int k) { return static_cast<int>(q_number(k).get_si()); }, py::arg("k"));
    m.def("bessel_h", [](int k) { return bessel_h(k).str(); }, py::arg("k"));
    m.def(
        "bessel_zero_estimate",
        [](double nu, int k) { return bessel_zero_estimate(Complex(nu, 0), k).first; },
        py::arg("nu"), py::arg("k"));

    m.def(
        "emit_symbolic",
        [](const std::string& what, int k) {
            try {
                return emit_symbolic(parse_emit_kind(what), k);
            } catch (const std::invalid_argument& e) {
                throw py::value_error(e.what());
            }
        },
        py::arg("what"), py::arg("k"));
}
