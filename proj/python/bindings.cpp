#include <pybind11/pybind11.h>

#include "cidim/reports.hpp"

namespace py = pybind11;
using namespace cidim;

namespace {

json parse_str(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ") + what + " json: " + e.what(), 0);
    }
}

AlgebraPtr ring_of(const std::string& ring) {
    return ring_from_json(parse_str(ring, "ring"));
}

Complex object_of(const AlgebraPtr& a, const std::string& object) {
    return object_from_json(a, parse_str(object, "object"));
}

std::vector<DeformationSpec> registry_of(const AlgebraPtr& a, const std::string& text) {
    if (text.empty()) return {};
    return registry_from_json(*a, parse_str(text, "deformations"));
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_cidim, m) {
    m.doc() = "exact homological dimensions over graded quotient rings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "ring_info",
        [](const std::string& ring, int cutoff, int degree_cap) {
            return dump(ring_info_report(ring_of(ring), cutoff, degree_cap));
        },
        py::arg("ring"), py::arg("cutoff") = 10, py::arg("degree_cap") = 20,
        "describe a ring given as a json string; returns a json report string");

    m.def(
        "homology",
        [](const std::string& ring, const std::string& object, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(homology_report(object_of(a, object), degree_cap));
        },
        py::arg("ring"), py::arg("object"), py::arg("degree_cap") = 20,
        "graded homology dimensions of a module or complex");

    m.def(
        "resolve",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(resolution_report(object_of(a, object), cutoff, degree_cap, true));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, "minimal free resolution with its Betti data");

    m.def(
        "betti",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(resolution_report(object_of(a, object), cutoff, degree_cap, false));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, "Betti table of the minimal free resolution");

    m.def(
        "poincare",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(poincare_report(object_of(a, object), cutoff, degree_cap));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, "Poincare series and a complexity estimate");

    m.def(
        "depth",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(depth_report(object_of(a, object), cutoff, degree_cap));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, "depth via the Koszul complex");

    m.def(
        "pd",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(pd_report(object_of(a, object), cutoff, degree_cap));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, "projective dimension");

    m.def(
        "gdim",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap,
           int window) {
            AlgebraPtr a = ring_of(ring);
            return dump(gdim_report(object_of(a, object), cutoff, degree_cap, window));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, py::arg("window") = 8, "reflexive-class dimension");

    m.def(
        "pcidim",
        [](const std::string& ring, const std::string& object, int cutoff, int degree_cap,
           int window) {
            AlgebraPtr a = ring_of(ring);
            return dump(pci_report(object_of(a, object), cutoff, degree_cap, window));
        },
        py::arg("ring"), py::arg("object"), py::arg("cutoff") = 10,
        py::arg("degree_cap") = 20, py::arg("window") = 8,
        "bounded-growth reflexive-class dimension");

    m.def(
        "cidim_bound",
        [](const std::string& ring, const std::string& object,
           const std::string& deformations, int cutoff, int degree_cap) {
            AlgebraPtr a = ring_of(ring);
            return dump(ci_bound_report(object_of(a, object), registry_of(a, deformations),
                                        cutoff, degree_cap));
        },
        py::arg("ring"), py::arg("object"), py::arg("deformations") = std::string(),
        py::arg("cutoff") = 10, py::arg("degree_cap") = 20,
        "upper bound from the deformation family");

    m.def(
        "hierarchy",
        [](const std::string& ring, const std::string& object,
           const std::string& deformations, int cutoff, int degree_cap, int window) {
            AlgebraPtr a = ring_of(ring);
            return dump(hierarchy_report(object_of(a, object), registry_of(a, deformations),
                                         cutoff, degree_cap, window));
        },
        py::arg("ring"), py::arg("object"), py::arg("deformations") = std::string(),
        py::arg("cutoff") = 10, py::arg("degree_cap") = 20, py::arg("window") = 8,
        "all four dimensions and their chain");

    m.def(
        "verify",
        [](uint64_t seed, const std::string& suite) {
            return dump(verify_report(seed, suite));
        },
        py::arg("seed") = static_cast<uint64_t>(20260823), py::arg("suite") = "paper",
        "run the bundled verification suites");
}
