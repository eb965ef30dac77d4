#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "crystal_pop/crystal.hpp"
#include "crystal_pop/digraph.hpp"
#include "crystal_pop/perm.hpp"
#include "crystal_pop/poset.hpp"

namespace crystal_pop {

/// Colors of the edges entering v.
inline ColorSet down_colors(const ColoredDigraph& graph, VertexId v) {
  return graph.in_colors(v);
}

/// Pop_◊(v): the source of v's component in the graph restricted to
/// down_colors(v). Found by walking down edges of those colors, always
/// taking the smallest available color.
VertexId pop_crystal(const ColoredDigraph& graph, VertexId v);

/// Same walk, with `choose` picking the next color from the nonempty set of
/// available ones. Every choice rule ends at the same vertex in a poppable
/// graph.
VertexId pop_crystal_walk(const ColoredDigraph& graph, VertexId v,
                          const std::function<int(ColorSet)>& choose);

/// Pop_◊(v) computed from the definition by materializing the component.
/// Throws Error(NotPoppable) when the component has several sources.
VertexId pop_crystal_by_component(const ColoredDigraph& graph, VertexId v);

/// Meet of v and every element it covers.
/// Throws Error(MeetUndefined) when that meet does not exist.
VertexId semilattice_pop(const ColoredDigraph& graph, const ReachabilityIndex& index,
                         VertexId v);

struct OrbitReport {
  VertexId start = 0;
  /// start, f(start), ... ending at the first fixed point.
  std::vector<VertexId> trajectory;
  std::size_t length() const { return trajectory.size(); }
};

/// Iterates `op` from `start` to a fixed point.
/// Throws Error(NonTermination) past `limit` elements.
OrbitReport orbit(VertexId start, const std::function<VertexId(VertexId)>& op,
                  std::size_t limit);

/// Forward orbit under Pop_◊.
OrbitReport pop_orbit(const ColoredDigraph& graph, VertexId start);

/// Pop_◊ orbit length of every vertex.
std::vector<std::size_t> orbit_lengths(const ColoredDigraph& graph);

struct MaxOrbit {
  std::size_t size = 0;
  VertexId witness = 0;  ///< first vertex in id order attaining the size
};

MaxOrbit max_orbit_size(const ColoredDigraph& graph);

/// Reverses every maximal decreasing run.
Permutation pop_permutation(const Permutation& w);

/// w * w_0(D_R(w)).
Permutation coxeter_pop(const Permutation& w);

/// w, Pop(w), ... ending at the identity.
std::vector<Permutation> permutation_orbit(const Permutation& w);

struct PermutationOrbitMax {
  std::size_t size = 0;
  Permutation witness;
};

/// Largest Pop orbit over all of S_m, first witness in lexicographic order.
PermutationOrbitMax max_permutation_orbit(int m);

/// True when every component of every color restriction has one source.
/// Enumerates all 2^n color subsets; throws Error(InvalidArgument) for n > 12.
bool is_poppable(const ColoredDigraph& graph);

/// Pop_◊(T_min . w) = T_min . Pop(w) for every w in the embedded quotient.
bool pop_agreement_on_quotient(const CrystalGraph& b);

}  // namespace crystal_pop
