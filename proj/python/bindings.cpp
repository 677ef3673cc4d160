#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "selfloop/energy.hpp"
#include "selfloop/graph.hpp"
#include "selfloop/graph6.hpp"
#include "selfloop/spectral.hpp"
#include "selfloop/verify.hpp"

namespace py = pybind11;
using namespace selfloop;

namespace {

SymmetricMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
  SymmetricMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw py::value_error("matrix must be square");
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows[i][j] != rows[j][i]) throw py::value_error("matrix must be symmetric");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Variant parse_variant(const std::string& s) {
  if (s == "h1") return Variant::kH1;
  if (s == "h2") return Variant::kH2;
  throw py::value_error("variant must be 'h1' or 'h2'");
}

Partner parse_partner(const std::string& s) {
  if (s == "empty") return Partner::kEmpty12;
  if (s == "complete") return Partner::kComplete12;
  throw py::value_error("partner must be 'empty' or 'complete'");
}

}  // namespace

PYBIND11_MODULE(_selfloop, m) {
  m.doc() = "Energy of graphs with self-loops";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<AmbiguityError>(m, "AmbiguityError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static("from_edges",
                  [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                    return Graph::from_edges(n, edges);
                  })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("triangle_count", &Graph::triangle_count)
      .def("regular_degree", &Graph::regular_degree)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "<Graph n=" << g.order() << " edges=" << g.edge_count() << ">";
        return os.str();
      });

  py::class_<LoopSet>(m, "LoopSet")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Vertex>& members) {
             return LoopSet(n, members);
           }),
           py::arg("n"), py::arg("members"))
      .def_property_readonly("alpha", &LoopSet::alpha)
      .def_property_readonly("universe", &LoopSet::universe)
      .def("members", &LoopSet::members)
      .def("contains", &LoopSet::contains)
      .def("complement", &LoopSet::complement)
      .def(py::self == py::self);

  py::class_<SelfLoopGraph>(m, "SelfLoopGraph")
      .def(py::init<Graph>())
      .def(py::init<Graph, LoopSet>())
      .def_property_readonly("base", &SelfLoopGraph::base)
      .def_property_readonly("loops", &SelfLoopGraph::loops)
      .def(py::self == py::self);

  m.def("make_named", [](const std::string& kind, const std::vector<long long>& params) {
    return make_named(kind, params);
  }, py::arg("kind"), py::arg("params") = std::vector<long long>{});
  m.def("join", &join);
  m.def("disjoint_copies", &disjoint_copies);
  m.def("connected_components", [](const Graph& g) { return connected_components(g).blocks; });
  m.def("is_bipartite", [](const Graph& g) -> std::optional<std::vector<VertexSet>> {
    auto p = is_bipartite(g);
    if (!p) return std::nullopt;
    return p->blocks;
  });
  m.def("maximal_independent_set", [](const Graph& g, const VertexSet& component) {
    return maximal_independent_set(g, component);
  });
  m.def("loop_complement", &loop_complement);

  m.def("decode_graph6", &decode_graph6);
  m.def("encode_graph6", &encode_graph6);
  m.def("parse_loop_mask", &parse_loop_mask);
  m.def("format_loop_mask", &format_loop_mask);

  m.def("eigenvalues_symmetric", [](const std::vector<std::vector<double>>& rows) {
    return eigenvalues_symmetric(to_matrix(rows)).values();
  });
  m.def("singular_values_symmetric", [](const std::vector<std::vector<double>>& rows) {
    return singular_values_symmetric(to_matrix(rows)).values();
  });
  m.def("cluster_spectrum", [](const std::vector<double>& values, double tol) {
    std::vector<std::pair<double, std::size_t>> out;
    for (const auto& c : cluster_spectrum(Spectrum(values), tol)) out.emplace_back(c.value, c.multiplicity);
    return out;
  }, py::arg("values"), py::arg("tol") = kClusterTolerance);
  m.def("join_spectrum_regular",
        [](double r1, const std::vector<double>& res1, std::size_t n1, double r2,
           const std::vector<double>& res2, std::size_t n2, double a, double b) {
          return join_spectrum_regular({r1, res1, n1}, {r2, res2, n2}, a, b).values();
        },
        py::arg("r1"), py::arg("residual1"), py::arg("n1"), py::arg("r2"),
        py::arg("residual2"), py::arg("n2"), py::arg("a") = 1.0, py::arg("b") = 1.0);
  m.def("subadditivity_gap", [](const std::vector<std::vector<double>>& a,
                                const std::vector<std::vector<double>>& b) {
    return subadditivity_gap(to_matrix(a), to_matrix(b));
  });

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_readonly("n", &EnergyReport::n)
      .def_readonly("alpha", &EnergyReport::alpha)
      .def_readonly("shift", &EnergyReport::shift)
      .def_readonly("energy", &EnergyReport::energy)
      .def_property_readonly("spectrum", [](const EnergyReport& r) { return r.spectrum.values(); });

  m.def("energy", &energy);
  m.def("energy_self_loop", &energy_self_loop);
  m.def("energy_from_spectrum", [](const std::vector<double>& values, std::size_t alpha, std::size_t n) {
    return energy_from_spectrum(Spectrum(values), alpha, n);
  });

  py::class_<WitnessCertificate>(m, "WitnessCertificate")
      .def_readonly("loop_set", &WitnessCertificate::loop_set)
      .def_readonly("e_base", &WitnessCertificate::e_base)
      .def_readonly("e_loops", &WitnessCertificate::e_loops)
      .def_property_readonly("route", [](const WitnessCertificate& c) { return std::string(to_string(c.route)); })
      .def_property_readonly("margin", &WitnessCertificate::margin);

  py::class_<Failure>(m, "Failure")
      .def_readonly("input_id", &Failure::input_id)
      .def_readonly("detail", &Failure::detail);
  py::class_<CheckSummary>(m, "CheckSummary")
      .def_readonly("total", &CheckSummary::total)
      .def_readonly("passed", &CheckSummary::passed)
      .def_readonly("failures", &CheckSummary::failures)
      .def("ok", &CheckSummary::ok);

  m.def("conjecture_witness", &conjecture_witness, py::arg("g"), py::arg("tol") = kComparisonTolerance);
  m.def("check_subadditivity", &check_subadditivity);
  m.def("check_theorem_cases", &check_theorem_cases, py::arg("g"), py::arg("s"),
        py::arg("tol") = kComparisonTolerance);

  py::class_<FamilyInstance>(m, "FamilyInstance")
      .def_readonly("n", &FamilyInstance::n)
      .def_readonly("graph", &FamilyInstance::graph)
      .def_readonly("predicted_energy", &FamilyInstance::predicted_energy)
      .def_property_readonly("predicted_spectrum", [](const FamilyInstance& f) {
        std::vector<std::pair<double, std::size_t>> out;
        for (const auto& c : f.predicted_spectrum) out.emplace_back(c.value, c.multiplicity);
        return out;
      });
  m.def("build_family", [](const std::string& variant, const std::string& partner, std::size_t n) {
    return build_family(parse_variant(variant), parse_partner(partner), n);
  });

  py::class_<FamilyPairReport>(m, "FamilyPairReport")
      .def_readonly("summary", &FamilyPairReport::summary)
      .def_readonly("energy_h1", &FamilyPairReport::energy_h1)
      .def_readonly("energy_h2", &FamilyPairReport::energy_h2)
      .def_readonly("predicted_energy", &FamilyPairReport::predicted_energy)
      .def_readonly("equal", &FamilyPairReport::equal);
  m.def("verify_family_pair", [](const std::string& partner, std::size_t n) {
    return verify_family_pair(parse_partner(partner), n);
  });
  m.def("family_closed_form_energy", [](const std::string& partner, std::size_t n) {
    return family_closed_form_energy(parse_partner(partner), n);
  });
  m.def("exhaustive_conjecture_check", &exhaustive_conjecture_check, py::arg("n"),
        py::arg("tol") = kComparisonTolerance, py::arg("threads") = 0u);
}
