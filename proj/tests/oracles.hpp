#pragma once

// Slow, independent reference implementations. Tests compare the library
// against these; nothing here calls the code under test except for plain
// accessors.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal_pop/digraph.hpp"
#include "crystal_pop/perm.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline std::string grid_text(const Grid& g) {
  std::string out;
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(g[r][c]);
    }
  }
  return out;
}

/// Every semistandard filling of `shape` with entries 1..max_entry, by
/// cell-by-cell backtracking.
inline std::vector<Grid> all_ssyt(const std::vector<int>& shape, int max_entry) {
  std::vector<Grid> out;
  Grid g;
  for (int len : shape) g.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  }
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(g);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, g[r][c - 1]);
    if (r > 0) lo = std::max(lo, g[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      g[r][c] = v;
      self(self, k + 1);
    }
    g[r][c] = 0;
  };
  rec(rec, 0);
  return out;
}

inline bool is_ssyt(const Grid& g, int max_entry) {
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] < 1 || g[r][c] > max_entry) return false;
      if (c > 0 && g[r][c - 1] > g[r][c]) return false;
      if (r > 0 && (c >= g[r - 1].size() || g[r - 1][c] >= g[r][c])) return false;
    }
  }
  return true;
}

/// F_i by repeatedly cancelling adjacent "(" ")" pairs in the filtered
/// reading word, where i+1 is "(" and i is ")".
inline std::optional<Grid> apply_f(const Grid& g, int i) {
  struct Letter {
    std::size_t r, c;
    char bracket;
  };
  std::vector<Letter> word;
  for (std::size_t r = g.size(); r-- > 0;) {
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] == i + 1) word.push_back({r, c, '('});
      if (g[r][c] == i) word.push_back({r, c, ')'});
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k].bracket == '(' && word[k + 1].bracket == ')') {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(k),
                   word.begin() + static_cast<std::ptrdiff_t>(k + 2));
        changed = true;
        break;
      }
    }
  }
  // What survives is ")))((("; F_i changes the last ")".
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k].bracket == ')') last = k;
  }
  if (!last) return std::nullopt;
  Grid out = g;
  out[word[*last].r][word[*last].c] = i + 1;
  return out;
}

/// u <= v by depth-first search over successors.
inline bool reachable(const crystal_pop::ColoredDigraph& g, crystal_pop::VertexId u,
                      crystal_pop::VertexId v) {
  std::vector<bool> seen(g.size(), false);
  std::vector<crystal_pop::VertexId> stack{u};
  seen[static_cast<std::size_t>(u)] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int i = 1; i <= g.num_colors(); ++i) {
      const auto y = g.succ(x, i);
      if (y && !seen[static_cast<std::size_t>(*y)]) {
        seen[static_cast<std::size_t>(*y)] = true;
        stack.push_back(*y);
      }
    }
  }
  return false;
}

/// Minimal upper bounds of {u, v}, by DFS reachability.
inline std::vector<crystal_pop::VertexId> minimal_upper_bounds(const crystal_pop::ColoredDigraph& g,
                                                               crystal_pop::VertexId u,
                                                               crystal_pop::VertexId v) {
  std::vector<crystal_pop::VertexId> bounds;
  for (crystal_pop::VertexId x = 0; x < static_cast<crystal_pop::VertexId>(g.size()); ++x) {
    if (reachable(g, u, x) && reachable(g, v, x)) bounds.push_back(x);
  }
  std::vector<crystal_pop::VertexId> minimal;
  for (auto x : bounds) {
    bool is_min = true;
    for (auto y : bounds) {
      if (y != x && reachable(g, y, x)) is_min = false;
    }
    if (is_min) minimal.push_back(x);
  }
  return minimal;
}

inline crystal_pop::Permutation word_product(const std::vector<int>& word, int m) {
  auto w = crystal_pop::Permutation::identity(m);
  for (int i : word) w = w.times_generator(i);
  return w;
}

inline int inversions(const crystal_pop::Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a) {
    for (int b = a + 1; b <= w.size(); ++b) count += w(a) > w(b) ? 1 : 0;
  }
  return count;
}

/// Some reduced word, found by bubble sort.
inline std::vector<int> bubble_reduced_word(const crystal_pop::Permutation& w) {
  std::vector<int> values = w.one_line();
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      if (values[k] > values[k + 1]) {
        std::swap(values[k], values[k + 1]);
        word.push_back(static_cast<int>(k) + 1);
        swapped = true;
      }
    }
  }
  // Sorting applied s_{j_1}, s_{j_2}, ... on the right, so w = s_{j_r} ... s_{j_1}.
  std::reverse(word.begin(), word.end());
  return word;
}

/// Bruhat lower interval of w via products of all subwords of a reduced word.
inline std::set<crystal_pop::Permutation> bruhat_below(const crystal_pop::Permutation& w) {
  const auto word = bubble_reduced_word(w);
  std::set<crystal_pop::Permutation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
    }
    out.insert(word_product(sub, w.size()));
  }
  return out;
}

/// Right weak upper set of u by breadth-first search over covers u < u s_i.
inline std::set<crystal_pop::Permutation> weak_above(const crystal_pop::Permutation& u) {
  std::set<crystal_pop::Permutation> seen{u};
  std::deque<crystal_pop::Permutation> queue{u};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int i = 1; i < x.size(); ++i) {
      const auto y = x.times_generator(i);
      if (inversions(y) == inversions(x) + 1 && seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

/// The coset W_J w, generated by left multiplication with s_j, j in J.
inline std::set<crystal_pop::Permutation> left_coset(const crystal_pop::Permutation& w,
                                                     const std::vector<int>& J) {
  std::set<crystal_pop::Permutation> seen{w};
  std::deque<crystal_pop::Permutation> queue{w};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int j : J) {
      const auto y = x.generator_times(j);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

inline crystal_pop::Permutation min_length_in(const std::set<crystal_pop::Permutation>& set) {
  return *std::min_element(set.begin(), set.end(), [](const auto& a, const auto& b) {
    return inversions(a) < inversions(b);
  });
}

/// Partitions of `cells` with at most `parts` parts.
inline std::vector<std::vector<int>> partitions(int cells, int parts, int largest = -1) {
  if (largest < 0) largest = cells;
  if (cells == 0) return {{}};
  if (parts == 0) return {};
  std::vector<std::vector<int>> out;
  for (int p = std::min(cells, largest); p >= 1; --p) {
    for (auto rest : partitions(cells - p, parts - 1, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  }
  return out;
}

}  // namespace oracle
