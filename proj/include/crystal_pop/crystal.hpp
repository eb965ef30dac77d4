#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crystal_pop/digraph.hpp"
#include "crystal_pop/perm.hpp"
#include "crystal_pop/tableaux.hpp"

namespace crystal_pop {

/// Applies the lowering operator F_i by bracket matching on the reading word.
/// Returns nullopt when F_i(T) = 0.
std::optional<Tableau> lowering_F(const Tableau& t, int i);

/// Applies the raising operator E_i. Returns nullopt when E_i(T) = 0.
std::optional<Tableau> raising_E(const Tableau& t, int i);

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// The crystal B_lambda^n: tableaux of shape lambda with entries at most n+1,
/// with an i-colored edge T -> F_i(T).
class CrystalGraph : public ColoredDigraph {
 public:
  const Partition& lambda() const { return lambda_; }
  int rank() const { return lambda_.rank(); }

  const Tableau& vertex(VertexId v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<Tableau>& vertices() const { return vertices_; }

  std::optional<VertexId> find(const Tableau& t) const;
  /// Parses the canonical text form and looks it up. Throws
  /// Error(InvalidArgument) when the tableau is not a vertex.
  VertexId find_text(std::string_view text) const;

  /// T_min, the unique source.
  VertexId min_vertex() const { return min_vertex_; }
  /// The unique sink.
  VertexId max_vertex() const;

 private:
  friend CrystalGraph generate_crystal(const Partition&, std::size_t);
  friend CrystalGraph dual_crystal(const CrystalGraph&);

  CrystalGraph(Partition lambda, int num_colors)
      : ColoredDigraph(0, num_colors), lambda_(std::move(lambda)) {}

  VertexId add_tableau(Tableau t);
  static std::string key_of(const Tableau& t);

  Partition lambda_;
  std::vector<Tableau> vertices_;
  std::unordered_map<std::string, VertexId> index_;
  VertexId min_vertex_ = 0;
};

/// Breadth-first closure of T_min under F_1..F_n. Vertex ids follow BFS
/// discovery order, trying colors in increasing order.
/// Throws Error(SizeLimitExceeded) past `vertex_cap` vertices.
CrystalGraph generate_crystal(const Partition& lambda,
                              std::size_t vertex_cap = kDefaultVertexCap);

/// Simultaneous BFS from the unique sources. Returns map[v] = image of v in
/// `b` when a bijection exists carrying every i-edge of `a` to a
/// color_map[i]-edge of `b` (color_map[0] unused).
std::optional<std::vector<VertexId>> match_colored(const ColoredDigraph& a, VertexId a_source,
                                                   const ColoredDigraph& b, VertexId b_source,
                                                   std::span<const int> color_map);

/// The dual crystal: the same digraph with color i relabeled n+1-i, vertices
/// relabeled by tableaux of shape lambda*. Vertex ids match the input.
/// Throws Error(IsomorphismFailure) if B_{lambda*}^n does not match.
CrystalGraph dual_crystal(const CrystalGraph& b);

/// Reverses the maximal i-chain through v.
VertexId weyl_reflect(const ColoredDigraph& b, VertexId v, int i);

/// v . (s_{i_1} ... s_{i_k}), applying s_{i_1} first.
VertexId weyl_act(const ColoredDigraph& b, VertexId v, std::span<const int> word);

/// Colors K = {i : lambda_i = lambda_{i+1}} generating the stabilizer of lambda.
ColorSet stabilizer_colors(const Partition& lambda);

struct QuotientPoint {
  Permutation w;
  VertexId vertex;
};

/// The orbit map ^K W -> B, w -> T_min . w, over the quotient in weak-order
/// BFS order.
std::vector<QuotientPoint> embed_parabolic_quotient(const CrystalGraph& b);

}  // namespace crystal_pop
