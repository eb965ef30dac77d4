#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "crystal_pop/crystal.hpp"
#include "crystal_pop/error.hpp"
#include "crystal_pop/poset.hpp"
#include "oracles.hpp"

using namespace crystal_pop;

namespace {

Tableau tab(const char* text, int n) { return parse_tableau(text, n); }

oracle::Grid grid_of(const Tableau& t) {
  oracle::Grid g;
  for (int r = 1; r <= t.rows(); ++r) {
    const auto row = t.row(r);
    g.emplace_back(row.begin(), row.end());
  }
  return g;
}

}  // namespace

TEST(Operators, WorkedExample) {
  const Tableau t = tab("1,1,2,2,3/3,3", 2);
  const auto f1 = lowering_F(t, 1);
  ASSERT_TRUE(f1);
  EXPECT_EQ(f1->to_string(), "1,2,2,2,3/3,3");
  EXPECT_FALSE(lowering_F(t, 2));
  EXPECT_EQ(raising_E(*f1, 1)->to_string(), "1,1,2,2,3/3,3");
}

TEST(Operators, SmallHook) {
  const Tableau t = tab("1,1/2", 2);
  EXPECT_EQ(lowering_F(t, 1)->to_string(), "1,2/2");
  EXPECT_EQ(raising_E(tab("1,2/2", 2), 1)->to_string(), "1,1/2");
}

TEST(Operators, HighestWeightHasNoRaising) {
  for (const auto& shape : std::vector<std::vector<int>>{{1}, {2, 1}, {3, 2, 2}, {4}}) {
    const Partition p(shape, 3);
    for (int i = 1; i <= 3; ++i) EXPECT_FALSE(raising_E(highest_weight_tableau(p), i));
  }
}

TEST(Operators, RejectColorOutOfRange) {
  EXPECT_THROW(lowering_F(tab("1,1/2", 2), 3), Error);
  EXPECT_THROW(raising_E(tab("1,1/2", 2), 0), Error);
}

TEST(Operators, AgreeWithPairCancellationOracle) {
  for (const auto& shape : std::vector<std::vector<int>>{{3, 2}, {2, 2, 1}, {4, 1}, {3, 1, 1}}) {
    const int n = 3;
    const Partition p(shape, n);
    for (const auto& g : oracle::all_ssyt(shape, n + 1)) {
      const Tableau t = validate_tableau(p, g);
      for (int i = 1; i <= n; ++i) {
        const auto ours = lowering_F(t, i);
        const auto expected = oracle::apply_f(g, i);
        ASSERT_EQ(ours.has_value(), expected.has_value()) << t.to_string() << " F" << i;
        if (ours) {
          EXPECT_EQ(grid_of(*ours), *expected);
          EXPECT_TRUE(oracle::is_ssyt(*expected, n + 1));
        }
      }
    }
  }
}

TEST(Operators, RaiseInvertsLowerAndShiftsWeight) {
  const Partition p({3, 2, 1}, 3);
  for (const auto& g : oracle::all_ssyt({3, 2, 1}, 4)) {
    const Tableau t = validate_tableau(p, g);
    for (int i = 1; i <= 3; ++i) {
      if (const auto f = lowering_F(t, i)) {
        EXPECT_EQ(*raising_E(*f, i), t);
        auto expected = weight(t).counts;
        --expected[static_cast<std::size_t>(i - 1)];
        ++expected[static_cast<std::size_t>(i)];
        EXPECT_EQ(weight(*f).counts, expected);
      }
      if (const auto e = raising_E(t, i)) EXPECT_EQ(*lowering_F(*e, i), t);
    }
  }
}

TEST(Generate, SmallCounts) {
  EXPECT_EQ(generate_crystal(Partition({2, 1}, 2)).size(), 8u);
  const CrystalGraph chain = generate_crystal(Partition({1}, 1));
  EXPECT_EQ(chain.size(), 2u);
  ASSERT_EQ(chain.edges().size(), 1u);
  EXPECT_EQ(chain.edges()[0].color, 1);
  EXPECT_EQ(generate_crystal(Partition({2, 2}, 3)).size(), 20u);
}

TEST(Generate, TwoOneRankTwoEdges) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  std::set<std::tuple<std::string, int, std::string>> edges;
  for (const ColoredEdge& e : b.edges()) {
    edges.emplace(b.vertex(e.src).to_string(), e.color, b.vertex(e.dst).to_string());
  }
  const std::set<std::tuple<std::string, int, std::string>> expected{
      {"1,1/2", 1, "1,2/2"}, {"1,1/2", 2, "1,1/3"}, {"1,1/3", 1, "1,2/3"},
      {"1,2/3", 1, "2,2/3"}, {"2,2/3", 2, "2,3/3"}, {"1,2/2", 2, "1,3/2"},
      {"1,3/2", 2, "1,3/3"}, {"1,3/3", 1, "2,3/3"}};
  EXPECT_EQ(edges, expected);
}

TEST(Generate, VertexSetMatchesEnumerationAndHookContent) {
  for (int n = 1; n <= 4; ++n) {
    for (int cells = 0; cells <= 8; ++cells) {
      for (const auto& shape : oracle::partitions(cells, n)) {
        const Partition p(shape, n);
        const CrystalGraph b = generate_crystal(p);
        std::set<std::string> ours;
        for (const Tableau& t : b.vertices()) ours.insert(t.to_string());
        std::set<std::string> expected;
        for (const auto& g : oracle::all_ssyt(shape, n + 1)) expected.insert(oracle::grid_text(g));
        EXPECT_EQ(ours, expected) << p.to_string() << " n=" << n;
        EXPECT_EQ(b.size(), hook_content_count(p));
      }
    }
  }
}

TEST(Generate, UniqueSourceAndSinkAndInverseMaps) {
  const CrystalGraph b = generate_crystal(Partition({3, 1, 1}, 3));
  int sources = 0;
  int sinks = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(b.size()); ++v) {
    sources += b.in_colors(v).empty() ? 1 : 0;
    sinks += b.out_colors(v).empty() ? 1 : 0;
    for (int i = 1; i <= 3; ++i) {
      if (const auto w = b.succ(v, i)) EXPECT_EQ(b.pred(*w, i), v);
    }
  }
  EXPECT_EQ(sources, 1);
  EXPECT_EQ(sinks, 1);
  EXPECT_TRUE(b.in_colors(b.min_vertex()).empty());
  EXPECT_TRUE(b.out_colors(b.max_vertex()).empty());
  EXPECT_EQ(b.vertex(b.min_vertex()), highest_weight_tableau(b.lambda()));
}

TEST(Generate, IdsAreALinearExtension) {
  const CrystalGraph b = generate_crystal(Partition({3, 2}, 3));
  for (const ColoredEdge& e : b.edges()) EXPECT_LT(e.src, e.dst);
}

TEST(Generate, CapIsEnforced) {
  try {
    generate_crystal(Partition({2, 1}, 2), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
  }
  // A cap equal to the exact size is allowed.
  EXPECT_EQ(generate_crystal(Partition({2, 1}, 2), 8).size(), 8u);
}

TEST(Generate, OversizedShapeIsRejectedBeforeGeneration) {
  const auto start = std::chrono::steady_clock::now();
  EXPECT_THROW(generate_crystal(Partition({40, 30, 20, 10}, 8), 1000), Error);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(Generate, FindText) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  EXPECT_EQ(b.find_text("1,1/2"), b.min_vertex());
  EXPECT_THROW(b.find_text("1,1,1"), Error);
}

TEST(Levi, EmptyAndFullRestrictions) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const LeviView none = levi_restrict(b, ColorSet{});
  const LeviView all = levi_restrict(b, ColorSet::range(2));
  for (VertexId v = 0; v < 8; ++v) {
    EXPECT_TRUE(none.is_source(v));
    for (int i = 1; i <= 2; ++i) {
      EXPECT_FALSE(none.succ(v, i));
      EXPECT_EQ(all.succ(v, i), b.succ(v, i));
    }
  }
}

TEST(Levi, OneColoredComponentOfTheMinimum) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const Component c = components_and_sources(levi_restrict(b, ColorSet::from_mask(0b10)), b.min_vertex());
  std::set<std::string> texts;
  for (VertexId v : c.vertices) texts.insert(b.vertex(v).to_string());
  EXPECT_EQ(texts, (std::set<std::string>{"1,1/2", "1,2/2"}));
  ASSERT_EQ(c.sources.size(), 1u);
  EXPECT_EQ(c.sources[0], b.min_vertex());
}

namespace {

void expect_same_graph(const ColoredDigraph& a, const ColoredDigraph& b,
                       std::span<const int> color_map) {
  ASSERT_EQ(a.size(), b.size());
  for (VertexId v = 0; v < static_cast<VertexId>(a.size()); ++v) {
    for (int i = 1; i <= a.num_colors(); ++i) {
      EXPECT_EQ(a.succ(v, i), b.succ(v, color_map[static_cast<std::size_t>(i)]));
    }
  }
}

}  // namespace

TEST(Dual, SingleBoxIsAColumnChain) {
  const CrystalGraph b = generate_crystal(Partition({1}, 2));
  const CrystalGraph d = dual_crystal(b);
  EXPECT_EQ(d.lambda(), Partition({1, 1}, 2));
  const std::vector<int> swap{0, 2, 1};
  expect_same_graph(b, d, swap);
  const CrystalGraph column = generate_crystal(Partition({1, 1}, 2));
  EXPECT_TRUE(match_colored(d, d.min_vertex(), column, column.min_vertex(), std::vector<int>{0, 1, 2}));
}

TEST(Dual, TwoOneIsSelfDual) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const CrystalGraph d = dual_crystal(b);
  EXPECT_EQ(d.lambda(), b.lambda());
  const std::vector<int> swap{0, 2, 1};
  EXPECT_TRUE(match_colored(b, b.min_vertex(), b, b.min_vertex(), swap));
}

TEST(Dual, RowAndRectangleAreDual) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2; n <= 3; ++n) {
      const CrystalGraph b = generate_crystal(Partition({k}, n));
      EXPECT_EQ(dual_crystal(b).lambda(), Partition(std::vector<int>(static_cast<std::size_t>(n), k), n));
    }
  }
}

TEST(Dual, IsAnInvolution) {
  for (const auto& shape : std::vector<std::vector<int>>{{2, 1}, {3, 1}, {3, 2, 1}, {2, 2}}) {
    const CrystalGraph b = generate_crystal(Partition(shape, 3));
    const CrystalGraph dd = dual_crystal(dual_crystal(b));
    EXPECT_EQ(dd.lambda(), b.lambda());
    EXPECT_EQ(dd.vertices(), b.vertices());
    EXPECT_EQ(dd.edges(), b.edges());
  }
}

TEST(Weyl, ReflectionExamples) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  EXPECT_EQ(b.vertex(weyl_reflect(b, b.min_vertex(), 1)).to_string(), "1,2/2");
  for (VertexId v = 0; v < 8; ++v) {
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(weyl_reflect(b, weyl_reflect(b, v, i), i), v);
      if (!b.succ(v, i) && !b.pred(v, i)) EXPECT_EQ(weyl_reflect(b, v, i), v);
    }
  }
}

TEST(Weyl, CoxeterRelationsHoldPointwise) {
  for (int n = 1; n <= 3; ++n) {
    for (int cells = 1; cells <= 6; ++cells) {
      for (const auto& shape : oracle::partitions(cells, n)) {
        const CrystalGraph b = generate_crystal(Partition(shape, n));
        for (VertexId v = 0; v < static_cast<VertexId>(b.size()); ++v) {
          EXPECT_EQ(weyl_act(b, v, std::vector<int>{}), v);
          for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(weyl_act(b, v, std::vector<int>{i, i}), v);
            for (int j = i + 1; j <= n; ++j) {
              if (j == i + 1) {
                EXPECT_EQ(weyl_act(b, v, std::vector<int>{i, j, i}),
                          weyl_act(b, v, std::vector<int>{j, i, j}));
              } else {
                EXPECT_EQ(weyl_act(b, v, std::vector<int>{i, j}), weyl_act(b, v, std::vector<int>{j, i}));
              }
            }
          }
        }
      }
    }
  }
}

TEST(Weyl, ActsOnTheRight) {
  // v . (s1 s2) reflects along color 1 first.
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const VertexId v = b.min_vertex();
  EXPECT_EQ(weyl_act(b, v, std::vector<int>{1, 2}), weyl_reflect(b, weyl_reflect(b, v, 1), 2));
}

TEST(Embedding, TwoOneEmbeddedOrbit) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const auto points = embed_parabolic_quotient(b);
  std::set<std::string> image;
  for (const auto& p : points) image.insert(b.vertex(p.vertex).to_string());
  EXPECT_EQ(image, (std::set<std::string>{"1,1/2", "1,2/2", "1,1/3", "1,3/3", "2,2/3", "2,3/3"}));
  EXPECT_TRUE(points.front().w.is_identity());
  EXPECT_EQ(points.front().vertex, b.min_vertex());
}

TEST(Embedding, ColumnsAreMinuscule) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      const CrystalGraph b = generate_crystal(Partition(std::vector<int>(static_cast<std::size_t>(m), 1), n));
      std::set<VertexId> image;
      for (const auto& p : embed_parabolic_quotient(b)) image.insert(p.vertex);
      EXPECT_EQ(image.size(), b.size());
    }
  }
}

TEST(Embedding, InjectiveOrderEmbeddingWithDescentsAsDownColors) {
  for (const auto& shape : std::vector<std::vector<int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {2, 1, 1}}) {
    const CrystalGraph b = generate_crystal(Partition(shape, 3));
    const ReachabilityIndex index(b);
    const auto points = embed_parabolic_quotient(b);
    std::set<VertexId> seen;
    for (const auto& p : points) {
      EXPECT_TRUE(seen.insert(p.vertex).second);
      EXPECT_EQ(right_descents(p.w), b.in_colors(p.vertex)) << p.w.to_string();
      for (int i = 1; i <= 3; ++i) {
        EXPECT_FALSE(b.succ(p.vertex, i) && b.pred(p.vertex, i));
      }
      for (const auto& q : points) {
        EXPECT_EQ(weak_leq(p.w, q.w), index.leq(p.vertex, q.vertex));
      }
    }
  }
}
