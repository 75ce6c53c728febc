#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparse_evolve/calculus.hpp"
#include "sparse_evolve/census.hpp"
#include "sparse_evolve/errors.hpp"
#include "sparse_evolve/evolve.hpp"
#include "sparse_evolve/expectation.hpp"
#include "sparse_evolve/experiment.hpp"
#include "sparse_evolve/io.hpp"

namespace py = pybind11;
using namespace sparse_evolve;

namespace {

Alpha to_alpha(const py::object& a) {
  if (py::isinstance<Alpha>(a)) return a.cast<Alpha>();
  if (py::isinstance<py::str>(a)) return Alpha::parse(a.cast<std::string>());
  const auto [num, den] = a.cast<std::pair<std::int64_t, std::int64_t>>();
  return Alpha(num, den);
}

std::string fraction(const Rational& r) { return to_string(r); }

std::vector<Exact> to_exponents(const std::vector<std::string>& xs) {
  std::vector<Exact> out;
  for (const auto& x : xs) {
    try {
      out.emplace_back(x);
    } catch (const std::exception&) {
      throw ArgumentError("exponent \"" + x + "\" is not a rational p/q");
    }
  }
  return out;
}

py::dict class_dict(const ExtensionClass& c) {
  py::dict d;
  d["sparse"] = c.is_sparse;
  d["dense"] = c.is_dense;
  d["safe"] = c.is_safe;
  d["rigid"] = c.is_rigid;
  d["degenerate"] = c.is_degenerate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Evolving sparse random graphs, predimension calculus and extension counts";

  static py::exception<DegeneracyError> degeneracy(m, "DegeneracyError", PyExc_ValueError);
  static py::exception<InfeasibleError> infeasible(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegeneracyError& e) {
      degeneracy(e.what());
    } catch (const InfeasibleError& e) {
      infeasible(e.what());
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Alpha>(m, "Alpha")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_static("parse", &Alpha::parse)
      .def_property_readonly("num", &Alpha::num)
      .def_property_readonly("den", &Alpha::den)
      .def("__float__", &Alpha::to_double)
      .def("__str__", &Alpha::to_string)
      .def("__repr__", [](const Alpha& a) { return "Alpha('" + a.to_string() + "')"; })
      .def("__eq__", [](const Alpha& a, const Alpha& b) { return a == b; });

  py::class_<RootedExtension>(m, "RootedExtension")
      .def(py::init<int, int, std::vector<RootedExtension::Edge>, std::vector<RootedExtension::Edge>>(),
           py::arg("root_size"), py::arg("ext_size"), py::arg("root_edges") = std::vector<RootedExtension::Edge>{},
           py::arg("ext_edges") = std::vector<RootedExtension::Edge>{})
      .def_static("graph", &RootedExtension::graph, py::arg("n"), py::arg("edges"))
      .def_static("clique", &RootedExtension::clique, py::arg("n"))
      .def_property_readonly("root_size", &RootedExtension::root_size)
      .def_property_readonly("ext_size", &RootedExtension::ext_size)
      .def_property_readonly("root_edges", &RootedExtension::root_edges)
      .def_property_readonly("ext_edges", &RootedExtension::ext_edges)
      .def("to_json", [](const RootedExtension& e) { return extension_to_json(e).dump(); })
      .def_static("from_json", [](const std::string& s) { return extension_from_json(parse_json(s)); })
      .def("__eq__", [](const RootedExtension& a, const RootedExtension& b) { return a == b; });

  py::class_<EvolvingGraph>(m, "EvolvingGraph")
      .def_property_readonly("num_vertices", &EvolvingGraph::num_vertices)
      .def_property_readonly("num_edges", &EvolvingGraph::num_edges)
      .def_property_readonly("seed", &EvolvingGraph::seed)
      .def_property_readonly("alpha", &EvolvingGraph::alpha)
      .def("edges", &EvolvingGraph::edges)
      .def("degree", &EvolvingGraph::degree)
      .def("neighbors", [](const EvolvingGraph& g, Vertex v) {
        auto n = g.neighbors(v);
        return std::vector<Vertex>(n.begin(), n.end());
      })
      .def("prefix", &EvolvingGraph::prefix)
      .def("to_json", [](const EvolvingGraph& g) { return graph_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(parse_json(s)); })
      .def_static("from_edges",
                  [](Vertex n, const std::vector<EvolvingGraph::Edge>& edges, const py::object& alpha) {
                    return EvolvingGraph::from_edges(n, edges, to_alpha(alpha));
                  },
                  py::arg("n"), py::arg("edges"), py::arg("alpha"));

  m.def("grow",
        [](const py::object& alpha, std::uint64_t seed, Vertex t) {
          return run_to(ProcessConfig{to_alpha(alpha), seed, std::nullopt, std::nullopt}, t);
        },
        py::arg("alpha"), py::arg("seed"), py::arg("T"));
  m.def("edge_probability", [](const py::object& alpha, Vertex tau) { return edge_probability(tau, to_alpha(alpha)); },
        py::arg("alpha"), py::arg("tau"));

  m.def("delta", [](const RootedExtension& e, const py::object& a) { return fraction(delta(e, to_alpha(a)).value); });
  m.def("d_value", [](const RootedExtension& e, const py::object& a) { return fraction(d_value(e, to_alpha(a)).value); });
  m.def("classify", [](const RootedExtension& e, const py::object& a) { return class_dict(classify(e, to_alpha(a))); });
  m.def("rooted_automorphism_count", &rooted_automorphism_count);

  m.def("count_embeddings",
        [](const EvolvingGraph& g, const RootedExtension& e, const std::vector<Vertex>& roots,
           const std::vector<Vertex>& forbidden, unsigned threads) {
          const EmbeddingCount c = count_embeddings(g, e, roots, forbidden, threads);
          py::dict d;
          d["embeddings"] = c.embeddings;
          d["copies_num"] = c.copies_num;
          d["copies_den"] = c.copies_den;
          return d;
        },
        py::arg("graph"), py::arg("extension"), py::arg("roots") = std::vector<Vertex>{},
        py::arg("forbidden") = std::vector<Vertex>{}, py::arg("threads") = 1);
  m.def("irregular_vertices",
        [](const EvolvingGraph& g, int r, const py::object& a) { return irregular_vertices(g, r, to_alpha(a)); },
        py::arg("graph"), py::arg("r"), py::arg("alpha"));
  m.def("weak_closure",
        [](const EvolvingGraph& g, const std::vector<Vertex>& x, int t, const py::object& a) {
          return weak_closure(g, x, t, to_alpha(a));
        },
        py::arg("graph"), py::arg("x"), py::arg("t"), py::arg("alpha"));
  m.def("is_t_generic",
        [](const EvolvingGraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b, int t,
           const py::object& alpha) {
          const GenericityResult r = is_t_generic(g, a, b, t, to_alpha(alpha));
          return py::make_tuple(r.generic, r.witness);
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("t"), py::arg("alpha"));

  m.def("integral_I",
        [](double tau0, double t, const std::vector<std::string>& a) { return integral_I(tau0, t, to_exponents(a)); },
        py::arg("tau0"), py::arg("T"), py::arg("alphas"));
  m.def("integral_J",
        [](double tau0, double t, const std::vector<std::string>& a) { return integral_J(tau0, t, to_exponents(a)); },
        py::arg("tau0"), py::arg("T"), py::arg("tail"));
  m.def("coeff_C",
        [](const std::vector<std::string>& a) {
          const CoefficientTable table = coeff_C_closed(to_exponents(a));
          std::vector<std::string> out;
          for (const auto& c : table.c) out.push_back(to_string(c));
          return out;
        },
        py::arg("alphas"));
  m.def("expected_count_closed",
        [](const RootedExtension& e, const py::object& a, double tau0, double t) {
          return expected_count_closed(e, to_alpha(a), tau0, t).value;
        },
        py::arg("extension"), py::arg("alpha"), py::arg("tau0"), py::arg("T"));
  m.def("exact_expectation_oracle",
        [](const RootedExtension& e, const py::object& a, std::uint64_t tau0, std::uint64_t t) {
          return exact_expectation_oracle(e, to_alpha(a), tau0, t);
        },
        py::arg("extension"), py::arg("alpha"), py::arg("tau0"), py::arg("T"));
  m.def("asymptotic_exponent",
        [](const RootedExtension& e, const py::object& a) {
          const AsymptoticExponent x = asymptotic_exponent(e, to_alpha(a));
          return py::make_tuple(std::string(to_string(x.regime)), fraction(x.exponent));
        },
        py::arg("extension"), py::arg("alpha"));

  m.def("run_experiment",
        [](const std::string& spec_json, unsigned threads) {
          const ExperimentSpec spec = ExperimentSpec::from_json(parse_json(spec_json, "spec"));
          ExperimentReport rep;
          {
            py::gil_scoped_release release;
            rep = run_experiment(spec, {threads, false});
          }
          return py::make_tuple(rep.csv(), rep.to_json().dump());
        },
        py::arg("spec_json"), py::arg("threads") = 1);
}
