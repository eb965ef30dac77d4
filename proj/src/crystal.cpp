#include "crystal_pop/crystal.hpp"

#include <deque>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

namespace {

void check_color(const Tableau& t, int i) {
  if (i < 1 || i > t.shape().rank()) {
    throw Error(ErrorCode::InvalidArgument,
                "color " + std::to_string(i) + " outside [1," +
                    std::to_string(t.shape().rank()) + "]");
  }
}

}  // namespace

std::optional<Tableau> lowering_F(const Tableau& t, int i) {
  check_color(t, i);
  // i+1 is an open bracket, i a closing one.
  int open = 0;
  int last_unmatched_close = -1;
  for (int flat : reading_order(t.shape())) {
    const int v = t.entries()[static_cast<std::size_t>(flat)];
    if (v == i + 1) {
      ++open;
    } else if (v == i) {
      if (open > 0) {
        --open;
      } else {
        last_unmatched_close = flat;
      }
    }
  }
  if (last_unmatched_close < 0) return std::nullopt;
  return t.with_entry(last_unmatched_close, i + 1);
}

std::optional<Tableau> raising_E(const Tableau& t, int i) {
  check_color(t, i);
  std::vector<int> open;
  for (int flat : reading_order(t.shape())) {
    const int v = t.entries()[static_cast<std::size_t>(flat)];
    if (v == i + 1) {
      open.push_back(flat);
    } else if (v == i && !open.empty()) {
      open.pop_back();
    }
  }
  if (open.empty()) return std::nullopt;
  return t.with_entry(open.front(), i);
}

std::string CrystalGraph::key_of(const Tableau& t) {
  auto e = t.entries();
  return std::string(reinterpret_cast<const char*>(e.data()), e.size());
}

VertexId CrystalGraph::add_tableau(Tableau t) {
  const auto id = static_cast<VertexId>(vertices_.size());
  index_.emplace(key_of(t), id);
  vertices_.push_back(std::move(t));
  add_vertex();
  return id;
}

std::optional<VertexId> CrystalGraph::find(const Tableau& t) const {
  if (!(t.shape() == lambda_)) return std::nullopt;
  auto it = index_.find(key_of(t));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId CrystalGraph::find_text(std::string_view text) const {
  Tableau t = parse_tableau(text, rank());
  auto id = find(t);
  if (!id) {
    throw Error(ErrorCode::InvalidArgument,
                "'" + std::string(text) + "' is not a vertex of B_(" +
                    lambda_.to_string() + ")^" + std::to_string(rank()));
  }
  return *id;
}

VertexId CrystalGraph::max_vertex() const {
  for (std::size_t v = size(); v-- > 0;) {
    if (out_colors(static_cast<VertexId>(v)).empty()) return static_cast<VertexId>(v);
  }
  return min_vertex_;
}

CrystalGraph generate_crystal(const Partition& lambda, std::size_t vertex_cap) {
  const int n = lambda.rank();
  if (const std::uint64_t expected = hook_content_count(lambda); expected > vertex_cap) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "B_(" + lambda.to_string() + ")^" + std::to_string(n) + " has " +
                    std::to_string(expected) + " vertices, above the cap of " +
                    std::to_string(vertex_cap));
  }
  CrystalGraph g(lambda, n);
  g.min_vertex_ = g.add_tableau(highest_weight_tableau(lambda));
  for (std::size_t head = 0; head < g.vertices_.size(); ++head) {
    const auto v = static_cast<VertexId>(head);
    for (int i = 1; i <= n; ++i) {
      std::optional<Tableau> next = lowering_F(g.vertices_[head], i);
      if (!next) continue;
      VertexId w;
      if (auto found = g.index_.find(CrystalGraph::key_of(*next)); found != g.index_.end()) {
        w = found->second;
      } else {
        if (g.vertices_.size() >= vertex_cap) {
          throw Error(ErrorCode::SizeLimitExceeded,
                      "B_(" + lambda.to_string() + ")^" + std::to_string(n) +
                          " exceeds the vertex cap of " + std::to_string(vertex_cap));
        }
        w = g.add_tableau(std::move(*next));
      }
      g.set_edge(v, w, i);
    }
  }
  return g;
}

std::optional<std::vector<VertexId>> match_colored(const ColoredDigraph& a, VertexId a_source,
                                                   const ColoredDigraph& b, VertexId b_source,
                                                   std::span<const int> color_map) {
  const int n = a.num_colors();
  if (a.size() != b.size() || n != b.num_colors() || a.num_edges() != b.num_edges() ||
      static_cast<int>(color_map.size()) != n + 1) {
    return std::nullopt;
  }
  std::vector<VertexId> forward(a.size(), -1);
  std::vector<VertexId> backward(b.size(), -1);
  std::deque<VertexId> queue;
  forward[static_cast<std::size_t>(a_source)] = b_source;
  backward[static_cast<std::size_t>(b_source)] = a_source;
  queue.push_back(a_source);
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    const VertexId y = forward[static_cast<std::size_t>(x)];
    for (int i = 1; i <= n; ++i) {
      const VertexId xs = a.succ_raw(x, i);
      const VertexId ys = b.succ_raw(y, color_map[static_cast<std::size_t>(i)]);
      if ((xs < 0) != (ys < 0)) return std::nullopt;
      if (xs < 0) continue;
      VertexId& fx = forward[static_cast<std::size_t>(xs)];
      VertexId& by = backward[static_cast<std::size_t>(ys)];
      if (fx < 0 && by < 0) {
        fx = ys;
        by = xs;
        queue.push_back(xs);
        ++reached;
      } else if (fx != ys || by != xs) {
        return std::nullopt;
      }
    }
  }
  if (reached != a.size()) return std::nullopt;
  return forward;
}

CrystalGraph dual_crystal(const CrystalGraph& b) {
  const int n = b.rank();
  const Partition dual_lambda = dual_partition(b.lambda());
  const CrystalGraph target = generate_crystal(dual_lambda, b.size() + 1);
  std::vector<int> color_map(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) color_map[static_cast<std::size_t>(i)] = n + 1 - i;
  auto matching = match_colored(b, b.min_vertex(), target, target.min_vertex(), color_map);
  if (!matching) {
    throw Error(ErrorCode::IsomorphismFailure,
                "B_(" + b.lambda().to_string() + ")^" + std::to_string(n) +
                    " with colors reversed does not match B_(" +
                    dual_lambda.to_string() + ")^" + std::to_string(n));
  }
  CrystalGraph out(dual_lambda, n);
  for (std::size_t v = 0; v < b.size(); ++v) {
    out.add_tableau(target.vertex((*matching)[v]));
  }
  for (const ColoredEdge& e : b.edges()) out.set_edge(e.src, e.dst, n + 1 - e.color);
  out.min_vertex_ = b.min_vertex();
  return out;
}

VertexId weyl_reflect(const ColoredDigraph& b, VertexId v, int i) {
  if (i < 1 || i > b.num_colors()) {
    throw Error(ErrorCode::InvalidArgument, "color " + std::to_string(i) + " out of range");
  }
  int below = 0;
  VertexId bottom = v;
  for (VertexId p = b.pred_raw(bottom, i); p >= 0; p = b.pred_raw(bottom, i)) {
    bottom = p;
    ++below;
  }
  int above = 0;
  for (VertexId x = b.succ_raw(v, i); x >= 0; x = b.succ_raw(x, i)) ++above;
  // v is x_{below+1} on a chain of below+above+1 elements; its mirror sits
  // `above` steps over the bottom.
  VertexId target = bottom;
  for (int k = 0; k < above; ++k) target = b.succ_raw(target, i);
  return target;
}

VertexId weyl_act(const ColoredDigraph& b, VertexId v, std::span<const int> word) {
  for (int i : word) v = weyl_reflect(b, v, i);
  return v;
}

ColorSet stabilizer_colors(const Partition& lambda) {
  ColorSet k;
  for (int i = 1; i <= lambda.rank(); ++i) {
    if (lambda.part(i) == lambda.part(i + 1)) k.insert(i);
  }
  return k;
}

std::vector<QuotientPoint> embed_parabolic_quotient(const CrystalGraph& b) {
  const int m = b.rank() + 1;
  std::vector<QuotientPoint> out;
  for (Permutation& w : parabolic_quotient(stabilizer_colors(b.lambda()), m)) {
    const std::vector<int> word = reduced_word(w);
    const VertexId v = weyl_act(b, b.min_vertex(), word);
    out.push_back({std::move(w), v});
  }
  return out;
}

}  // namespace crystal_pop
