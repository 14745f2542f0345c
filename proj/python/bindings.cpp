#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spslab/io.hpp"
#include "spslab/oracle.hpp"

namespace py = pybind11;
using namespace spslab;

namespace {

std::vector<std::string> labels_of(const PointUniverse& u, const Bitset& s) {
    return u.labels_of(s);
}

std::vector<std::vector<std::string>> family_labels(const PointUniverse& u, const SetFamily& f) {
    std::vector<std::vector<std::string>> out;
    out.reserve(f.size());
    for (const auto& s : f) out.push_back(u.labels_of(s));
    return out;
}

py::dict report_dict(const TheoremReport& rep) {
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["name"] = c.name;
        d["verdict"] = c.verdict == Verdict::Pass             ? "pass"
                       : c.verdict == Verdict::FailWithWitness ? "fail"
                                                               : "not-applicable";
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict out;
    out["instance"] = rep.instance_id;
    out["checks"] = checks;
    out["all_passed"] = rep.all_passed();
    return out;
}

} // namespace

PYBIND11_MODULE(_spslab, m) {
    m.doc() = "Finite state property systems and closure spaces";

    py::class_<FiniteClosureSpace>(m, "ClosureSpace")
        .def_property_readonly("points",
                               [](const FiniteClosureSpace& sp) { return sp.universe().labels(); })
        .def_property_readonly("closed_sets",
                               [](const FiniteClosureSpace& sp) {
                                   return family_labels(sp.universe(), sp.closed());
                               })
        .def("closure_of",
             [](const FiniteClosureSpace& sp, const std::vector<std::string>& labels) {
                 return labels_of(sp.universe(), closure_of(sp, sp.universe().subset_of(labels)));
             })
        .def("clopens",
             [](const FiniteClosureSpace& sp) {
                 return family_labels(sp.universe(), clopen_sets(sp));
             })
        .def("is_topological", [](const FiniteClosureSpace& sp) { return is_topological(sp); })
        .def("is_connected", [](const FiniteClosureSpace& sp) { return is_connected(sp); })
        .def("is_totally_disconnected",
             [](const FiniteClosureSpace& sp) { return is_totally_disconnected(sp); })
        .def("is_zero_dimensional",
             [](const FiniteClosureSpace& sp) { return is_zero_dimensional(sp); })
        .def("components",
             [](const FiniteClosureSpace& sp) {
                 return family_labels(sp.universe(), components(sp).blocks);
             })
        .def("quasi_components",
             [](const FiniteClosureSpace& sp) {
                 return family_labels(sp.universe(), quasi_components(sp).blocks);
             })
        .def("brute_components",
             [](const FiniteClosureSpace& sp) {
                 return family_labels(sp.universe(), brute_components(sp).blocks);
             })
        .def("zero_dimensional_core",
             [](const FiniteClosureSpace& sp) { return zero_dimensional_core(sp); })
        .def("to_sps", [](const FiniteClosureSpace& sp) { return functor_G(sp); })
        .def("counit_check", [](const FiniteClosureSpace& sp) { return counit_check(sp); })
        .def("check_theorems",
             [](const FiniteClosureSpace& sp, const std::string& id) {
                 return report_dict(theorem_suite(sp, id));
             },
             py::arg("instance_id") = "space")
        .def("serialize", [](const FiniteClosureSpace& sp) { return serialize_instance(sp); })
        .def("__eq__", [](const FiniteClosureSpace& a,
                          const FiniteClosureSpace& b) { return a == b; })
        .def("__repr__", [](const FiniteClosureSpace& sp) {
            return "<ClosureSpace with " + std::to_string(sp.point_count()) + " points, " +
                   std::to_string(sp.closed().size()) + " closed sets>";
        });

    py::class_<StatePropertySystem>(m, "Sps")
        .def_property_readonly(
            "states", [](const StatePropertySystem& s) { return s.states().labels(); })
        .def_property_readonly(
            "properties", [](const StatePropertySystem& s) { return s.lattice().names(); })
        .def("xi",
             [](const StatePropertySystem& s, const std::string& state) {
                 std::vector<std::string> out;
                 s.xi(s.states().index_of(state)).for_each([&](int a) {
                     out.push_back(s.lattice().name(a));
                 });
                 return out;
             })
        .def("cartan",
             [](const StatePropertySystem& s, const std::string& prop) {
                 return labels_of(s.states(), cartan(s, s.lattice().index_of(prop)));
             })
        .def("strongest_property",
             [](const StatePropertySystem& s, const std::string& state) {
                 return s.lattice().name(strongest_property(s, s.states().index_of(state)));
             })
        .def("ssr",
             [](const StatePropertySystem& s, const std::string& a, const std::string& b) {
                 return ssr(s, s.lattice().index_of(a), s.lattice().index_of(b));
             })
        .def("is_classical", [](const StatePropertySystem& s) { return is_classical_sps(s); })
        .def("is_pure_nonclassical",
             [](const StatePropertySystem& s) { return is_pure_nonclassical(s); })
        .def("classical_properties",
             [](const StatePropertySystem& s) {
                 std::vector<std::string> out;
                 classical_properties(s).for_each(
                     [&](int a) { out.push_back(s.lattice().name(a)); });
                 return out;
             })
        .def("classical_complement",
             [](const StatePropertySystem& s, const std::string& a) -> py::object {
                 auto w = is_classical_property(s, s.lattice().index_of(a));
                 if (!w) return py::none();
                 return py::cast(s.lattice().name(*w));
             })
        .def("to_closure", [](const StatePropertySystem& s) { return functor_F(s); })
        .def("segment",
             [](const StatePropertySystem& s, const std::string& c) {
                 return segment_system(s, s.lattice().index_of(c));
             })
        .def("classical_part", [](const StatePropertySystem& s) { return classical_part(s); })
        .def("totally_classical",
             [](const StatePropertySystem& s) {
                 TotallyClassicalResult tc = totally_classical_system(s);
                 py::dict out;
                 out["ok"] = tc.ok();
                 if (tc.ok())
                     out["system"] = py::cast(*tc.system);
                 else
                     out["counterexample"] = tc.failure_summary();
                 return out;
             })
        .def("decompose",
             [](const StatePropertySystem& s) {
                 Decomposition d = decompose(s);
                 py::dict out;
                 py::list comps;
                 for (const auto& c : d.components) {
                     py::dict cd;
                     cd["omega"] = labels_of(s.states(), c.omega);
                     cd["component_property"] = s.lattice().name(c.s_omega);
                     cd["system"] = py::cast(c.sps);
                     comps.append(cd);
                 }
                 out["components"] = comps;
                 out["totally_classical_ok"] = d.totally_classical.ok();
                 if (d.totally_classical.ok())
                     out["totally_classical"] = py::cast(*d.totally_classical.system);
                 else
                     out["counterexample"] = d.totally_classical.failure_summary();
                 out["classical_part"] = py::cast(d.classical_part);
                 py::list evidence;
                 for (const auto& e : d.evidence) {
                     py::dict ed;
                     ed["name"] = e.name;
                     ed["pass"] = e.pass;
                     ed["detail"] = e.detail;
                     evidence.append(ed);
                 }
                 out["evidence"] = evidence;
                 out["evidence_all_passed"] = d.all_evidence_passed();
                 return out;
             })
        .def("check_theorems",
             [](const StatePropertySystem& s, const std::string& id) {
                 return report_dict(theorem_suite(s, id));
             },
             py::arg("instance_id") = "sps")
        .def("serialize", [](const StatePropertySystem& s) { return serialize_instance(s); })
        .def("__eq__",
             [](const StatePropertySystem& a, const StatePropertySystem& b) { return a == b; })
        .def("__repr__", [](const StatePropertySystem& s) {
            return "<Sps with " + std::to_string(s.state_count()) + " states, " +
                   std::to_string(s.lattice().size()) + " properties>";
        });

    m.def("parse", [](const std::string& text) -> py::object {
        Instance inst = parse_instance(text);
        if (std::holds_alternative<FiniteClosureSpace>(inst))
            return py::cast(std::get<FiniteClosureSpace>(inst));
        return py::cast(std::get<StatePropertySystem>(inst));
    });
    m.def("enumerate_spaces", [](int n) { return enumerate_closure_spaces(n); });
    m.def("random_space",
          [](int n, double density, std::uint64_t seed) {
              return random_closure_space(n, density, seed);
          },
          py::arg("n"), py::arg("density"), py::arg("seed"));
    m.def("isomorphic", [](const StatePropertySystem& a, const StatePropertySystem& b) {
        return sps_isomorphic(a, b).has_value();
    });

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
