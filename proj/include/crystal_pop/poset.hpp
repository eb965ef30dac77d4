#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crystal_pop/digraph.hpp"

namespace crystal_pop {

/// Up-sets and down-sets of every vertex of a DAG as dense bitsets.
///
/// Bits are indexed by position in a topological order, so the first set bit
/// of any up-set intersection is a minimal element of it. Memory is
/// 2 * V^2 / 8 bytes.
class ReachabilityIndex {
 public:
  /// Throws Error(InvalidArgument) if the graph has a directed cycle.
  explicit ReachabilityIndex(const ColoredDigraph& graph);

  std::size_t size() const { return order_.size(); }
  /// u <= v, i.e. a directed path u -> v exists.
  bool leq(VertexId u, VertexId v) const;
  bool comparable(VertexId u, VertexId v) const { return leq(u, v) || leq(v, u); }

  /// Vertex ids in the topological order used for bit positions.
  const std::vector<VertexId>& topological_order() const { return order_; }
  std::size_t position(VertexId v) const { return position_[static_cast<std::size_t>(v)]; }

  std::span<const std::uint64_t> up_words(VertexId v) const;
  std::span<const std::uint64_t> down_words(VertexId v) const;
  std::size_t words_per_set() const { return words_; }

  /// Ids in the up-set (resp. down-set) of v, in topological order.
  std::vector<VertexId> up_set(VertexId v) const;
  std::vector<VertexId> down_set(VertexId v) const;

 private:
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

/// Least upper bound, or nullopt when the upper bounds have two or more
/// minimal elements.
std::optional<VertexId> join(const ReachabilityIndex& index, VertexId u, VertexId v);

/// Greatest lower bound of a nonempty set.
std::optional<VertexId> meet(const ReachabilityIndex& index, std::span<const VertexId> set);

struct LatticeVerdict {
  bool is_lattice = true;
  /// First pair (u, v), u < v in id order, with no join. When the poset has
  /// no least element the witness is a pair of distinct sources.
  std::optional<std::pair<VertexId, VertexId>> witness;
};

/// Checks joins of all pairs, stopping at the first failure. A finite poset
/// with a least element in which every pair has a join is a lattice.
LatticeVerdict is_lattice(const ColoredDigraph& graph, const ReachabilityIndex& index);

/// Checks x ^ (y v z) = (x ^ y) v (x ^ z) over all triples from precomputed
/// join and meet tables. Returns nullopt when the poset is not a lattice.
/// Throws Error(SizeLimitExceeded) above `max_vertices`.
std::optional<bool> is_distributive(const ColoredDigraph& graph, const ReachabilityIndex& index,
                                    std::size_t max_vertices = 400);

struct BowtieCertificate {
  VertexId t1 = 0;
  VertexId t2 = 0;
  VertexId u1 = 0;
  VertexId u2 = 0;
  friend bool operator==(const BowtieCertificate&, const BowtieCertificate&) = default;
};

/// True when t1 || t2, u1 || u2, t1 is covered by u1 (an edge), t1 <= u2,
/// t2 <= u1 and t2 <= u2. Such a quadruple shows t1 and t2 have no join.
bool verify_bowtie(const ColoredDigraph& graph, const ReachabilityIndex& index,
                   const BowtieCertificate& c);

/// Exhaustive search for a bowtie, scanning u1 in id order. O(V^2 * n * V/64).
std::optional<BowtieCertificate> find_bowtie(const ColoredDigraph& graph,
                                             const ReachabilityIndex& index);

struct Component {
  std::vector<VertexId> vertices;  ///< sorted
  std::vector<VertexId> sources;   ///< sorted
};

/// Weakly connected component of `start` in the restricted graph, with its
/// vertices of in-degree zero.
Component components_and_sources(const LeviView& view, VertexId start);

}  // namespace crystal_pop
