#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgepart/edge_coloring.hpp"
#include "edgepart/error.hpp"
#include "edgepart/graph.hpp"
#include "edgepart/oracles.hpp"
#include "edgepart/partition.hpp"
#include "edgepart/reductions.hpp"
#include "edgepart/representation.hpp"
#include "edgepart/tree_decomp.hpp"

namespace py = pybind11;
using namespace edgepart;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Family family_arg(const std::string& name) {
  if (auto f = family_from_string(name)) return *f;
  throw ParameterError("unknown family '" + name + "'");
}

py::object decision(const TreeDecision& d) {
  py::dict out;
  out["yes"] = d.yes;
  out["witness"] = d.witness ? py::cast(*d.witness) : py::none();
  out["alphas"] = d.alphas;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge partitions of graphs into degree-constrained parts";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("degrees", &Graph::degrees)
      .def("max_degree", &Graph::max_degree)
      .def("degree_set", [](const Graph& g) {
        const DegreeSet d = degree_set(g);
        return std::vector<std::size_t>(d.values().begin(), d.values().end());
      })
      .def("to_text", &serialize_graph)
      .def_static("from_text", [](const std::string& s) { return parse_graph(s); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("petersen", &petersen);
  m.def("complement", &complement);

  py::class_<EdgePartition>(m, "EdgePartition")
      .def(py::init<std::size_t, std::vector<PartId>>(), py::arg("k"), py::arg("parts"))
      .def_property_readonly("num_parts", &EdgePartition::num_parts)
      .def_property_readonly("parts", &EdgePartition::parts)
      .def("part_sizes", &EdgePartition::part_sizes)
      .def("to_text", &serialize_partition)
      .def_static("from_text", [](const std::string& s) { return parse_partition(s); });

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : {Family::weakly_semiregular, Family::semiregular, Family::regular, Family::locally_regular,
                     Family::locally_irregular, Family::regular_or_locally_irregular,
                     Family::irregular_or_weakly_semiregular}) {
      out.emplace_back(to_string(f));
    }
    return out;
  });
  m.def("verify_partition", [](const Graph& g, const EdgePartition& p, const std::string& family) {
    return verify_partition(g, p, family_arg(family));
  }, py::arg("graph"), py::arg("partition"), py::arg("family"));
  m.def("wr_lower_bound", &wr_lower_bound, py::arg("graph"), py::arg("loose") = false);

  m.def("wr2_tree", [](const Graph& t) { return decision(wr2_tree(t)); });
  m.def("wrc_tree", [](const Graph& t, std::size_t c) { return decision(wrc_tree(t, c)); },
        py::arg("tree"), py::arg("c"));
  m.def("alg3", [](const Graph& t) {
    const BinarySplit s = alg3(t);
    py::dict out;
    out["partition"] = s.partition;
    out["labels"] = s.labels;
    out["offset"] = s.offset;
    return out;
  });
  m.def("sr_tree", &sr_tree);
  m.def("sr_general", &sr_general);
  m.def("wr2_deg4", &wr2_deg4);
  m.def("vizing", [](const Graph& g) { return vizing(g).colors; });

  m.def("oracle_min_parts", [](const Graph& g, const std::string& family, std::size_t max_parts,
                               std::size_t max_edges) -> py::object {
    const OracleResult r = oracle_min_parts(g, family_arg(family), {.max_edges = max_edges, .max_parts = max_parts});
    if (!r.min_parts) return py::none();
    return py::make_tuple(*r.min_parts, *r.witness);
  }, py::arg("graph"), py::arg("family"), py::arg("max_parts") = 8, py::arg("max_edges") = 16);
  m.def("enumerate_free_trees", &enumerate_free_trees);

  m.def("nae_solve", [](const std::vector<std::vector<std::uint32_t>>& clauses) {
    NaeFormula f;
    for (const auto& c : clauses) {
      for (auto x : c) f.num_vars = std::max<std::size_t>(f.num_vars, x + 1);
    }
    f.clauses = clauses;
    return nae_bruteforce(f);
  });
  m.def("thm4_construct", &thm4_construct);

  py::class_<Representation>(m, "Representation")
      .def(py::init<std::uint64_t, std::vector<std::uint64_t>>(), py::arg("modulus"), py::arg("labels"))
      .def_readonly("modulus", &Representation::modulus)
      .def_readonly("labels", &Representation::labels);
  m.def("verify_rep", &verify_rep);
  m.def("graph_from_rep", &graph_from_rep);
  m.def("rep_search", [](const Graph& g, std::uint64_t r_max) { return rep_search(g, {.r_max = r_max}); },
        py::arg("graph"), py::arg("r_max") = 64);
  m.def("rep_construct_tfc", [](const Graph& g) {
    const TfcRepresentation t = rep_construct_tfc(g);
    return py::make_tuple(t.rep, t.plan.primes);
  });
}
