#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "crystal_pop/classifier.hpp"
#include "crystal_pop/crystal.hpp"
#include "crystal_pop/key.hpp"
#include "crystal_pop/pop.hpp"
#include "crystal_pop/serialize.hpp"

using namespace crystal_pop;
using nlohmann::json;

TEST(Serialize, CrystalJsonRoundTripsEdges) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const json doc = json::parse(crystal_to_json(b));
  EXPECT_EQ(doc["lambda"], json::array({2, 1}));
  EXPECT_EQ(doc["n"], 2);
  ASSERT_EQ(doc["vertices"].size(), b.size());
  EXPECT_EQ(doc["vertices"][0]["rows"], b.vertex(0).to_string());
  ASSERT_EQ(doc["edges"].size(), b.num_edges());
  for (const auto& e : doc["edges"]) {
    const VertexId src = e["src"].get<VertexId>();
    EXPECT_EQ(b.succ(src, e["color"].get<int>()), e["dst"].get<VertexId>());
  }
}

TEST(Serialize, DotListsEveryEdge) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const std::string dot = crystal_to_dot(b);
  EXPECT_EQ(dot.rfind("digraph crystal {", 0), 0u);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
  EXPECT_EQ(arrows, b.num_edges());
  EXPECT_NE(dot.find("label=\"1,1/2\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"F2\""), std::string::npos);
}

TEST(Serialize, OrbitTableAndRecord) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const auto lengths = orbit_lengths(b);
  std::istringstream csv(orbit_table_csv(b, lengths));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "vertex,tableau,orbit_length");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, b.size());
  const json record = json::parse(orbit_record_json(b, max_orbit_size(b)));
  EXPECT_EQ(record["max_orbit"], 3);
  EXPECT_EQ(record["coxeter_number"], 3);
  EXPECT_TRUE(b.find(parse_tableau(record["witness"].get<std::string>(), 2)).has_value());
}

TEST(Serialize, CertificateJson) {
  const json doc = json::parse(certificate_to_json(bowtie_two_rows(Partition({5, 2}, 3))));
  EXPECT_EQ(doc["kind"], "bowtie");
  EXPECT_EQ(doc["construction"], "two-rows");
  ASSERT_EQ(doc["tableaux"].size(), 4u);
  EXPECT_EQ(doc["tableaux"][0], "1,1,1,1,3/3,4");
  const json pair = json::parse(certificate_to_json(nojoin_staircase_tail(Partition({3, 2, 1, 1}, 4))));
  EXPECT_EQ(pair["kind"], "no-join-pair");
}

TEST(Serialize, KeyMapJson) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const auto keys = key_map_all(build_demazure_family(b));
  const json doc = json::parse(key_map_to_json(b, keys));
  ASSERT_EQ(doc["keys"].size(), b.size());
  EXPECT_EQ(doc["keys"][static_cast<std::size_t>(b.min_vertex())]["key"], "123");
}

TEST(Serialize, SweepCsv) {
  SweepReport report;
  SweepRow lattice;
  lattice.lambda = Partition({3, 2, 1}, 3);
  lattice.predicted = lattice.brute_force = true;
  lattice.clause = LatticeClause::Staircase321;
  lattice.vertices = 64;
  SweepRow skipped;
  skipped.lambda = Partition({9, 9}, 4);
  skipped.skipped = true;
  report.rows = {lattice, skipped};
  std::istringstream csv(sweep_to_csv(report));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "lambda,n,predicted,brute_force,clause,vertices,millis,certificate");
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("3 2 1,3,true,true,staircase-321,64,", 0), 0u) << line;
  std::getline(csv, line);
  EXPECT_NE(line.find(",skipped,"), std::string::npos) << line;
}
