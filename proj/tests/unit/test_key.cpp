#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "crystal_pop/crystal.hpp"
#include "crystal_pop/error.hpp"
#include "crystal_pop/key.hpp"
#include "crystal_pop/perm.hpp"
#include "oracles.hpp"

using namespace crystal_pop;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Demazure subsets built directly from their definition: D_e = {T_min} and
// D_{u s_i} is the closure of D_u under F_i, taken along a reduced word.
std::set<VertexId> demazure_by_word(const CrystalGraph& b, const Permutation& w) {
  std::set<VertexId> current{b.min_vertex()};
  for (int i : oracle::bubble_reduced_word(w)) {
    std::set<VertexId> next;
    for (VertexId v : current) {
      for (auto x = std::optional<VertexId>(v); x; x = b.succ(*x, i)) next.insert(*x);
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

TEST(DemazureFamily, BoundaryMembers) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const DemazureFamily family = build_demazure_family(b);
  const auto e = family.index_of(Permutation::identity(3));
  ASSERT_TRUE(e);
  EXPECT_EQ(family.members(*e), std::vector<VertexId>{b.min_vertex()});
  const auto top = family.index_of(Permutation::longest(3));
  ASSERT_TRUE(top);
  EXPECT_EQ(family.set_size(*top), b.size());
}

TEST(DemazureFamily, MatchesReducedWordClosure) {
  for (int n = 1; n <= 3; ++n) {
    for (int cells = 1; cells <= 4; ++cells) {
      for (const auto& shape : oracle::partitions(cells, n)) {
        const CrystalGraph b = generate_crystal(Partition(shape, n));
        const DemazureFamily family = build_demazure_family(b);
        for (std::size_t k = 0; k < family.elements().size(); ++k) {
          const auto expected = demazure_by_word(b, family.elements()[k]);
          const auto got = family.members(k);
          EXPECT_EQ(std::set<VertexId>(got.begin(), got.end()), expected);
          EXPECT_EQ(family.set_size(k), expected.size());
          for (VertexId v = 0; v < static_cast<VertexId>(b.size()); ++v) {
            EXPECT_EQ(family.contains(k, v), expected.count(v) > 0);
          }
        }
      }
    }
  }
}

TEST(KeyMap, HighestWeightMapsToIdentity) {
  const CrystalGraph b = generate_crystal(Partition({3, 1}, 3));
  const DemazureFamily family = build_demazure_family(b);
  EXPECT_TRUE(key_map(family, b.min_vertex()).is_identity());
}

TEST(KeyMap, ExamplesOnTwoOneShape) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const DemazureFamily family = build_demazure_family(b);
  EXPECT_EQ(key_map(family, b.find_text("1,2/3")), P("312"));
  EXPECT_EQ(key_map(family, b.find_text("1,3/2")), P("231"));
  EXPECT_EQ(key_map(family, b.find_text("2,3/3")), P("321"));
  EXPECT_EQ(key_map(family, b.find_text("1,1/2")), Permutation::identity(3));
}

TEST(KeyMap, WeakMinimaNeedNotBeUnique) {
  const CrystalGraph b = generate_crystal(Partition({2, 1}, 2));
  const DemazureFamily family = build_demazure_family(b);
  const VertexId v = b.find_text("1,2/2");
  auto minima = weak_minimal_keys(family, v);
  std::sort(minima.begin(), minima.end());
  EXPECT_EQ(minima, (std::vector<Permutation>{P("213"), P("312")}));
  // The Bruhat minimum still exists and is the shorter one.
  EXPECT_EQ(key_map(family, v), P("213"));
}

TEST(KeyMap, QuotientEmbeddingIsASection) {
  for (int n = 1; n <= 3; ++n) {
    for (int cells = 1; cells <= 5; ++cells) {
      for (const auto& shape : oracle::partitions(cells, n)) {
        const CrystalGraph b = generate_crystal(Partition(shape, n));
        const DemazureFamily family = build_demazure_family(b);
        for (const QuotientPoint& point : embed_parabolic_quotient(b)) {
          EXPECT_EQ(key_map(family, point.vertex), point.w);
        }
      }
    }
  }
}

TEST(KeyMap, MinusculeCrystalIsTheQuotient) {
  // Every vertex of B(1^k) is extremal, so the key map is a bijection onto
  // the minimal coset representatives.
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const CrystalGraph b = generate_crystal(Partition(std::vector<int>(static_cast<std::size_t>(k), 1), n));
      const DemazureFamily family = build_demazure_family(b);
      const auto keys = key_map_all(family);
      const auto quotient = parabolic_quotient(stabilizer_colors(b.lambda()), n + 1);
      EXPECT_EQ(std::set<Permutation>(keys.begin(), keys.end()),
                std::set<Permutation>(quotient.begin(), quotient.end()));
      EXPECT_EQ(keys.size(), quotient.size());
    }
  }
}

TEST(KeyMap, KeysLieInTheQuotient) {
  const CrystalGraph b = generate_crystal(Partition({3, 1}, 3));
  const DemazureFamily family = build_demazure_family(b);
  const ColorSet K = stabilizer_colors(b.lambda());
  for (const Permutation& w : key_map_all(family)) EXPECT_TRUE((left_descents(w) & K).empty());
}

TEST(KeyProperties, HoldOnSmallShapes) {
  for (const auto& [shape, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 1}, 2}, {{2, 2}, 3}, {{3, 1}, 3}, {{3, 2, 1}, 3}, {{2}, 3}}) {
    const CrystalGraph b = generate_crystal(Partition(shape, n));
    const DemazureFamily family = build_demazure_family(b);
    const KeyReport properties = verify_key_properties(b, family);
    EXPECT_TRUE(properties.ok()) << b.lambda().to_string() << ": " << properties.violations.front();
    EXPECT_GT(properties.checks, 0u);
    const KeyReport inequality = verify_pop_key_inequality(b, family);
    EXPECT_TRUE(inequality.ok()) << b.lambda().to_string() << ": " << inequality.violations.front();
  }
}
