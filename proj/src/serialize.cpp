#include "crystal_pop/serialize.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace crystal_pop {

namespace {

using nlohmann::json;

json lambda_json(const Partition& lambda) {
  return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

// Partitions in CSV cells use spaces so the column stays unquoted.
std::string lambda_cell(const Partition& lambda) {
  std::string out;
  for (int part : lambda.parts()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(part);
  }
  return out;
}

}  // namespace

std::string crystal_to_json(const CrystalGraph& b) {
  json vertices = json::array();
  for (std::size_t v = 0; v < b.size(); ++v) {
    vertices.push_back({{"id", v}, {"rows", b.vertex(static_cast<VertexId>(v)).to_string()}});
  }
  json edges = json::array();
  for (const ColoredEdge& e : b.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"color", e.color}});
  }
  json out = {{"lambda", lambda_json(b.lambda())},
              {"n", b.rank()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
  return out.dump(2) + "\n";
}

std::string crystal_to_dot(const CrystalGraph& b) {
  static constexpr std::array<const char*, 10> kPalette = {
      "red", "blue", "darkgreen", "orange", "purple",
      "brown", "magenta", "cyan4", "gold3", "gray40"};
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < b.size(); ++v) {
    out << "  v" << v << " [label=\"" << b.vertex(static_cast<VertexId>(v)).to_string()
        << "\"];\n";
  }
  for (const ColoredEdge& e : b.edges()) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\"F" << e.color << "\", color="
        << kPalette[static_cast<std::size_t>(e.color - 1) % kPalette.size()] << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string orbit_table_csv(const CrystalGraph& b, const std::vector<std::size_t>& lengths) {
  std::ostringstream out;
  out << "vertex,tableau,orbit_length\n";
  for (std::size_t v = 0; v < lengths.size(); ++v) {
    out << v << ",\"" << b.vertex(static_cast<VertexId>(v)).to_string() << "\"," << lengths[v]
        << "\n";
  }
  return out.str();
}

std::string orbit_record_json(const CrystalGraph& b, const MaxOrbit& max) {
  json out = {{"lambda", lambda_json(b.lambda())},
              {"n", b.rank()},
              {"max_orbit", max.size},
              {"coxeter_number", b.rank() + 1},
              {"witness", b.vertex(max.witness).to_string()}};
  return out.dump() + "\n";
}

std::string certificate_to_json(const TableauCertificate& certificate) {
  json tableaux = json::array();
  for (const Tableau& t : certificate.tableaux) tableaux.push_back(t.to_string());
  json out = {{"kind", certificate.kind == CertificateKind::Bowtie ? "bowtie" : "no-join-pair"},
              {"construction", certificate.construction},
              {"tableaux", std::move(tableaux)}};
  return out.dump(2) + "\n";
}

std::string key_map_to_json(const CrystalGraph& b, const std::vector<Permutation>& keys) {
  json rows = json::array();
  for (std::size_t v = 0; v < keys.size(); ++v) {
    rows.push_back({{"id", v},
                    {"rows", b.vertex(static_cast<VertexId>(v)).to_string()},
                    {"key", keys[v].to_string()}});
  }
  json out = {{"lambda", lambda_json(b.lambda())}, {"n", b.rank()}, {"keys", std::move(rows)}};
  return out.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "lambda,n,predicted,brute_force,clause,vertices,millis,certificate\n";
  for (const SweepRow& row : report.rows) {
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", row.millis);
    out << lambda_cell(row.lambda) << ',' << row.lambda.rank() << ','
        << (row.predicted ? "true" : "false") << ','
        << (row.skipped ? "skipped" : (row.brute_force ? "true" : "false")) << ','
        << to_string(row.clause) << ',' << row.vertices << ',' << millis << ','
        << row.certificate << "\n";
  }
  return out.str();
}

}  // namespace crystal_pop
