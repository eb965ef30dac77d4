#include "crystal_pop/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <queue>
#include <string>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

namespace {

constexpr std::size_t kWordBits = 64;

inline bool test_bit(std::span<const std::uint64_t> words, std::size_t bit) {
  return ((words[bit / kWordBits] >> (bit % kWordBits)) & 1u) != 0;
}

}  // namespace

ReachabilityIndex::ReachabilityIndex(const ColoredDigraph& graph) {
  const std::size_t n = graph.size();
  const int colors = graph.num_colors();

  // Kahn's algorithm, smallest id first: for BFS-generated crystals this
  // reproduces the id order.
  std::vector<int> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    indegree[v] = graph.in_colors(static_cast<VertexId>(v)).size();
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<VertexId>(v));
  }
  order_.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order_.push_back(v);
    for (int i = 1; i <= colors; ++i) {
      const VertexId w = graph.succ_raw(v, i);
      if (w >= 0 && --indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (order_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "graph has a directed cycle");
  }
  position_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) position_[static_cast<std::size_t>(order_[p])] = p;

  words_ = (n + kWordBits - 1) / kWordBits;
  up_.assign(n * words_, 0);
  down_.assign(n * words_, 0);
  for (std::size_t p = n; p-- > 0;) {
    std::uint64_t* row = up_.data() + p * words_;
    row[p / kWordBits] |= std::uint64_t{1} << (p % kWordBits);
    for (int i = 1; i <= colors; ++i) {
      const VertexId w = graph.succ_raw(order_[p], i);
      if (w < 0) continue;
      const std::uint64_t* other = up_.data() + position_[static_cast<std::size_t>(w)] * words_;
      for (std::size_t k = p / kWordBits; k < words_; ++k) row[k] |= other[k];
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::uint64_t* row = down_.data() + p * words_;
    row[p / kWordBits] |= std::uint64_t{1} << (p % kWordBits);
    for (int i = 1; i <= colors; ++i) {
      const VertexId w = graph.pred_raw(order_[p], i);
      if (w < 0) continue;
      const std::uint64_t* other = down_.data() + position_[static_cast<std::size_t>(w)] * words_;
      for (std::size_t k = 0; k <= p / kWordBits; ++k) row[k] |= other[k];
    }
  }
}

bool ReachabilityIndex::leq(VertexId u, VertexId v) const {
  return test_bit(up_words(u), position(v));
}

std::span<const std::uint64_t> ReachabilityIndex::up_words(VertexId v) const {
  return {up_.data() + position(v) * words_, words_};
}

std::span<const std::uint64_t> ReachabilityIndex::down_words(VertexId v) const {
  return {down_.data() + position(v) * words_, words_};
}

std::vector<VertexId> ReachabilityIndex::up_set(VertexId v) const {
  std::vector<VertexId> out;
  auto words = up_words(v);
  for (std::size_t p = 0; p < size(); ++p) {
    if (test_bit(words, p)) out.push_back(order_[p]);
  }
  return out;
}

std::vector<VertexId> ReachabilityIndex::down_set(VertexId v) const {
  std::vector<VertexId> out;
  auto words = down_words(v);
  for (std::size_t p = 0; p < size(); ++p) {
    if (test_bit(words, p)) out.push_back(order_[p]);
  }
  return out;
}

std::optional<VertexId> join(const ReachabilityIndex& index, VertexId u, VertexId v) {
  if (index.leq(u, v)) return v;
  if (index.leq(v, u)) return u;
  auto a = index.up_words(u);
  auto b = index.up_words(v);
  const std::size_t words = index.words_per_set();
  std::size_t k = std::max(index.position(u), index.position(v)) / kWordBits;
  std::size_t first = k;
  while (first < words && (a[first] & b[first]) == 0) ++first;
  if (first == words) return std::nullopt;
  const std::size_t z = first * kWordBits +
                        static_cast<std::size_t>(std::countr_zero(a[first] & b[first]));
  const VertexId candidate = index.topological_order()[z];
  auto c = index.up_words(candidate);
  for (; k < words; ++k) {
    if ((a[k] & b[k]) != c[k]) return std::nullopt;
  }
  return candidate;
}

std::optional<VertexId> meet(const ReachabilityIndex& index, std::span<const VertexId> set) {
  if (set.empty()) {
    throw Error(ErrorCode::InvalidArgument, "meet of an empty set");
  }
  const std::size_t words = index.words_per_set();
  std::vector<std::uint64_t> common(index.down_words(set.front()).begin(),
                                    index.down_words(set.front()).end());
  for (VertexId v : set.subspan(1)) {
    auto d = index.down_words(v);
    for (std::size_t k = 0; k < words; ++k) common[k] &= d[k];
  }
  std::size_t last = words;
  while (last > 0 && common[last - 1] == 0) --last;
  if (last == 0) return std::nullopt;
  const std::size_t z = (last - 1) * kWordBits + 63 -
                        static_cast<std::size_t>(std::countl_zero(common[last - 1]));
  const VertexId candidate = index.topological_order()[z];
  auto d = index.down_words(candidate);
  for (std::size_t k = 0; k < words; ++k) {
    if (common[k] != d[k]) return std::nullopt;
  }
  return candidate;
}

LatticeVerdict is_lattice(const ColoredDigraph& graph, const ReachabilityIndex& index) {
  LatticeVerdict verdict;
  const auto n = static_cast<VertexId>(graph.size());
  std::vector<VertexId> sources;
  for (VertexId v = 0; v < n; ++v) {
    if (graph.in_colors(v).empty()) sources.push_back(v);
  }
  if (sources.size() > 1) {
    verdict.is_lattice = false;
    verdict.witness = std::make_pair(sources[0], sources[1]);
    return verdict;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!join(index, u, v)) {
        verdict.is_lattice = false;
        verdict.witness = std::make_pair(u, v);
        return verdict;
      }
    }
  }
  return verdict;
}

std::optional<bool> is_distributive(const ColoredDigraph& graph, const ReachabilityIndex& index,
                                    std::size_t max_vertices) {
  const std::size_t n = graph.size();
  if (n > max_vertices) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "distributivity check is limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (!is_lattice(graph, index).is_lattice) return std::nullopt;
  std::vector<VertexId> joins(n * n);
  std::vector<VertexId> meets(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::array<VertexId, 2> pair{static_cast<VertexId>(a), static_cast<VertexId>(b)};
      joins[a * n + b] = *join(index, pair[0], pair[1]);
      meets[a * n + b] = *meet(index, pair);
    }
  }
  auto at = [n](const std::vector<VertexId>& table, VertexId a, VertexId b) {
    return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        const auto vx = static_cast<VertexId>(x);
        const VertexId lhs = at(meets, vx, at(joins, static_cast<VertexId>(y), static_cast<VertexId>(z)));
        const VertexId rhs = at(joins, at(meets, vx, static_cast<VertexId>(y)),
                                at(meets, vx, static_cast<VertexId>(z)));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

namespace {

bool covers(const ColoredDigraph& graph, VertexId lower, VertexId upper) {
  for (int i = 1; i <= graph.num_colors(); ++i) {
    if (graph.succ_raw(lower, i) == upper) return true;
  }
  return false;
}

bool valid_vertex(const ColoredDigraph& graph, VertexId v) {
  return v >= 0 && static_cast<std::size_t>(v) < graph.size();
}

}  // namespace

bool verify_bowtie(const ColoredDigraph& graph, const ReachabilityIndex& index,
                   const BowtieCertificate& c) {
  for (VertexId v : {c.t1, c.t2, c.u1, c.u2}) {
    if (!valid_vertex(graph, v)) return false;
  }
  return !index.comparable(c.t1, c.t2) && !index.comparable(c.u1, c.u2) &&
         covers(graph, c.t1, c.u1) && index.leq(c.t1, c.u2) && index.leq(c.t2, c.u1) &&
         index.leq(c.t2, c.u2);
}

std::optional<BowtieCertificate> find_bowtie(const ColoredDigraph& graph,
                                             const ReachabilityIndex& index) {
  const auto n = static_cast<VertexId>(graph.size());
  const std::size_t words = index.words_per_set();
  std::vector<std::uint64_t> candidates(words);
  for (VertexId u1 = 0; u1 < n; ++u1) {
    for (int i = 1; i <= graph.num_colors(); ++i) {
      const VertexId t1 = graph.pred_raw(u1, i);
      if (t1 < 0) continue;
      auto down_u1 = index.down_words(u1);
      auto up_t1 = index.up_words(t1);
      auto down_t1 = index.down_words(t1);
      for (VertexId u2 = 0; u2 < n; ++u2) {
        if (index.comparable(u1, u2) || !index.leq(t1, u2)) continue;
        auto down_u2 = index.down_words(u2);
        for (std::size_t k = 0; k < words; ++k) {
          candidates[k] = down_u1[k] & down_u2[k] & ~up_t1[k] & ~down_t1[k];
        }
        for (std::size_t k = 0; k < words; ++k) {
          if (candidates[k] == 0) continue;
          const std::size_t p = k * kWordBits +
                                static_cast<std::size_t>(std::countr_zero(candidates[k]));
          return BowtieCertificate{t1, index.topological_order()[p], u1, u2};
        }
      }
    }
  }
  return std::nullopt;
}

Component components_and_sources(const LeviView& view, VertexId start) {
  const ColoredDigraph& graph = view.graph();
  Component component;
  std::vector<bool> seen(graph.size(), false);
  std::deque<VertexId> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    component.vertices.push_back(v);
    if (view.is_source(v)) component.sources.push_back(v);
    for (int i : view.colors().to_vector()) {
      for (VertexId w : {graph.succ_raw(v, i), graph.pred_raw(v, i)}) {
        if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(component.vertices.begin(), component.vertices.end());
  std::sort(component.sources.begin(), component.sources.end());
  return component;
}

}  // namespace crystal_pop
