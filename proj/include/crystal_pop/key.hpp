#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal_pop/crystal.hpp"
#include "crystal_pop/perm.hpp"

namespace crystal_pop {

/// Demazure crystals D_w for every w in the parabolic quotient ^K W, stored
/// as vertex bitsets. D_e = {T_min} and D_{u s_i} is the closure of D_u
/// under F_i whenever u < u s_i in ^K W.
class DemazureFamily {
 public:
  /// Quotient elements in breadth-first weak-order layers (so by length).
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t num_vertices() const { return num_vertices_; }

  std::optional<std::size_t> index_of(const Permutation& w) const;
  bool contains(std::size_t element, VertexId v) const;
  std::size_t set_size(std::size_t element) const;
  /// Vertices of D_w in id order.
  std::vector<VertexId> members(std::size_t element) const;
  bool is_subset(std::size_t a, std::size_t b) const;

  /// Indices of all w with v in D_w.
  std::vector<std::size_t> memberships(VertexId v) const;

 private:
  friend DemazureFamily build_demazure_family(const CrystalGraph&);

  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::size_t num_vertices_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Builds D_w along every weak-order cover of the quotient.
/// Throws Error(InconsistentFamily) when two covers of the same w produce
/// different sets.
DemazureFamily build_demazure_family(const CrystalGraph& b);

/// κ(v): the Bruhat-least w with v in D_w.
/// Throws Error(NonUniqueMinimum) when that set has no Bruhat minimum.
Permutation key_map(const DemazureFamily& family, VertexId v);

/// κ of every vertex, indexed by vertex id.
std::vector<Permutation> key_map_all(const DemazureFamily& family);

/// Minimal elements of {w : v in D_w} in the right weak order.
std::vector<Permutation> weak_minimal_keys(const DemazureFamily& family, VertexId v);

struct KeyReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For all vertices v and colors i:
///  - E_i(v) and F_i(v) both nonzero implies κ(F_i v) = κ(v);
///  - E_i(v) = 0 != F_i(v) implies κ(F_i v) is κ(v) s_i or κ(v);
///  - s_i a right descent of κ(v) implies E_i(v) != 0;
///  - κ(v) = e only at T_min;
///  - κ(v) <=_R κ(F_i v).
/// Also checks that the family is monotone in the weak order, that D_e is
/// {T_min} and that the top set is the whole crystal.
KeyReport verify_key_properties(const CrystalGraph& b, const DemazureFamily& family);

/// κ(Pop_◊(v)) <=_R Pop(κ(v)) for every vertex.
KeyReport verify_pop_key_inequality(const CrystalGraph& b, const DemazureFamily& family);

}  // namespace crystal_pop
