#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crystal_pop/index_set.hpp"

namespace crystal_pop {

/// An element of the symmetric group S_m in one-line notation.
///
/// Products compose right to left: (u * v)(x) = u(v(x)). With this
/// convention w * s_i swaps the entries in positions i and i+1, and
/// s_i * w swaps the values i and i+1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(InvalidArgument) unless `one_line` is a bijection on 1..m.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  /// The simple transposition s_i in S_m.
  static Permutation generator(int i, int m);
  /// The longest element of S_m, m m-1 ... 1.
  static Permutation longest(int m);
  /// Digit string "532481976" or comma list "5,3,2,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(one_line_.size()); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// w * s_i
  Permutation times_generator(int i) const;
  /// s_i * w
  Permutation generator_times(int i) const;

  /// Digits when m <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Number of inversions, equal to the Coxeter length.
int length(const Permutation& w);

/// {i : w(i) > w(i+1)}
GeneratorSet right_descents(const Permutation& w);
/// {i : w^{-1}(i) > w^{-1}(i+1)}
GeneratorSet left_descents(const Permutation& w);

/// Right weak order: u <=_R w iff the value inversions of u are contained in
/// those of w.
bool weak_leq(const Permutation& u, const Permutation& w);

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// w_0(J): reverses each window of consecutive positions joined by J.
Permutation longest_parabolic(GeneratorSet J, int m);

/// The minimum-length element of the coset W_J * w.
Permutation min_coset_rep(const Permutation& w, GeneratorSet J);

/// {x : D_L(x) ∩ J = ∅} listed in breadth-first weak-order layers from e.
std::vector<Permutation> parabolic_quotient(GeneratorSet J, int m);

/// A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Permutation& w);

/// True when no two members of the set are adjacent generators.
bool generators_commute(GeneratorSet s);

/// All of S_m in lexicographic order.
std::vector<Permutation> all_permutations(int m);

/// Outcome of the exhaustive checks on Coxeter pop-stack sorting in S_m.
struct LemmaReport {
  int m = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustively checks, over all of S_m and all J ⊆ S:
///  - y <=_R z implies ^J y <=_R ^J z;
///  - x <=_B y with commuting right descents of y implies Pop(x) <=_B Pop(y);
///  - ^J(Pop(w)) <=_R Pop(^J w);
///  - for J = S \ {s}: Pop^{m-1}(^J w_0) = e, Pop^{m-2}(^J w_0) != e, and
///    every iterate has commuting right descents.
LemmaReport verify_coxeter_pop_lemmas(int m);

}  // namespace crystal_pop
