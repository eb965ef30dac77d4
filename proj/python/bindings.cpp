#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crystal_pop/classifier.hpp"
#include "crystal_pop/crystal.hpp"
#include "crystal_pop/error.hpp"
#include "crystal_pop/key.hpp"
#include "crystal_pop/pop.hpp"
#include "crystal_pop/poset.hpp"
#include "crystal_pop/serialize.hpp"

namespace py = pybind11;
using namespace crystal_pop;

namespace {

class PyCrystal {
 public:
  PyCrystal(const std::vector<int>& shape, int n, std::size_t cap)
      : graph_(generate_crystal(Partition(shape, n), cap)) {}

  const CrystalGraph& graph() const { return graph_; }

  const ReachabilityIndex& index() {
    if (!index_) index_.emplace(graph_);
    return *index_;
  }

  std::vector<std::string> tableaux() const {
    std::vector<std::string> out;
    for (const Tableau& t : graph_.vertices()) out.push_back(t.to_string());
    return out;
  }

  std::vector<std::tuple<int, int, int>> edges() const {
    std::vector<std::tuple<int, int, int>> out;
    for (const ColoredEdge& e : graph_.edges()) out.emplace_back(e.src, e.dst, e.color);
    return out;
  }

  std::optional<py::dict> certificate() {
    const auto c = certificate_for(graph_, index());
    if (!c) return std::nullopt;
    py::dict d;
    d["kind"] = c->kind == CertificateKind::Bowtie ? "bowtie" : "no-join-pair";
    d["construction"] = c->construction;
    std::vector<std::string> tableaux;
    for (const Tableau& t : c->tableaux) tableaux.push_back(t.to_string());
    d["tableaux"] = tableaux;
    return d;
  }

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    for (const Permutation& w : key_map_all(build_demazure_family(graph_))) {
      out.push_back(w.to_string());
    }
    return out;
  }

 private:
  CrystalGraph graph_;
  std::optional<ReachabilityIndex> index_;
};

std::optional<std::string> apply_operator(const std::string& text, int n, int i, bool lower) {
  const Tableau t = parse_tableau(text, n);
  const auto out = lower ? lowering_F(t, i) : raising_E(t, i);
  if (!out) return std::nullopt;
  return out->to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Type A crystal posets, pop-stack sorting and lattice tests";

  static py::exception<Error> base_error(m, "CrystalPopError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<PyCrystal>(m, "Crystal")
      .def(py::init<const std::vector<int>&, int, std::size_t>(), py::arg("shape"), py::arg("n"),
           py::arg("cap") = kDefaultVertexCap)
      .def("__len__", [](const PyCrystal& c) { return c.graph().size(); })
      .def_property_readonly("n", [](const PyCrystal& c) { return c.graph().rank(); })
      .def_property_readonly("shape", [](const PyCrystal& c) {
        const auto parts = c.graph().lambda().parts();
        return std::vector<int>(parts.begin(), parts.end());
      })
      .def("tableaux", &PyCrystal::tableaux)
      .def("edges", &PyCrystal::edges, "(src, dst, color) triples")
      .def("find", [](const PyCrystal& c, const std::string& text) { return c.graph().find_text(text); })
      .def("leq", [](PyCrystal& c, int u, int v) { return c.index().leq(u, v); })
      .def("pop", [](const PyCrystal& c, int v) { return pop_crystal(c.graph(), v); })
      .def("pop_orbit",
           [](const PyCrystal& c, int v) { return pop_orbit(c.graph(), v).trajectory; })
      .def("max_orbit",
           [](const PyCrystal& c) {
             const MaxOrbit max = max_orbit_size(c.graph());
             return std::make_pair(max.size, c.graph().vertex(max.witness).to_string());
           })
      .def("semilattice_pop",
           [](PyCrystal& c, int v) { return semilattice_pop(c.graph(), c.index(), v); })
      .def("is_lattice", [](PyCrystal& c) { return is_lattice(c.graph(), c.index()).is_lattice; })
      .def("is_poppable", [](const PyCrystal& c) { return is_poppable(c.graph()); })
      .def("certificate", &PyCrystal::certificate)
      .def("keys", &PyCrystal::keys, "key map of every vertex in one-line notation")
      .def("to_json", [](const PyCrystal& c) { return crystal_to_json(c.graph()); })
      .def("to_dot", [](const PyCrystal& c) { return crystal_to_dot(c.graph()); });

  m.def("lowering_f",
        [](const std::string& t, int n, int i) { return apply_operator(t, n, i, true); },
        py::arg("tableau"), py::arg("n"), py::arg("i"));
  m.def("raising_e",
        [](const std::string& t, int n, int i) { return apply_operator(t, n, i, false); },
        py::arg("tableau"), py::arg("n"), py::arg("i"));
  m.def("pop_permutation",
        [](const std::string& w) { return pop_permutation(Permutation::parse(w)).to_string(); });
  m.def("coxeter_pop",
        [](const std::string& w) { return coxeter_pop(Permutation::parse(w)).to_string(); });
  m.def("hook_content_count", [](const std::vector<int>& shape, int n) {
    return hook_content_count(Partition(shape, n));
  });
  m.def("predict_lattice", [](const std::vector<int>& shape, int n) {
    const Classification c = predict_lattice(Partition(shape, n));
    return std::make_pair(c.is_lattice_predicted, std::string(to_string(c.matched_clause)));
  });
  m.def(
      "classification_sweep",
      [](int max_n, int max_cells, std::size_t cap) {
        const SweepReport report = classification_sweep(max_n, max_cells, cap);
        py::list rows;
        for (const SweepRow& row : report.rows) {
          py::dict d;
          const auto parts = row.lambda.parts();
          d["shape"] = std::vector<int>(parts.begin(), parts.end());
          d["n"] = row.lambda.rank();
          d["skipped"] = row.skipped;
          d["predicted"] = row.predicted;
          d["brute_force"] = row.brute_force;
          d["clause"] = std::string(to_string(row.clause));
          d["vertices"] = row.vertices;
          d["certificate"] = row.certificate;
          rows.append(d);
        }
        return rows;
      },
      py::arg("max_n"), py::arg("max_cells"), py::arg("cap") = std::size_t{100000});
}
