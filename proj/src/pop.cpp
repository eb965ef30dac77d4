#include "crystal_pop/pop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

VertexId pop_crystal_walk(const ColoredDigraph& graph, VertexId v,
                          const std::function<int(ColorSet)>& choose) {
  const ColorSet allowed = down_colors(graph, v);
  VertexId current = v;
  for (;;) {
    const ColorSet available = graph.in_colors(current) & allowed;
    if (available.empty()) return current;
    const int i = choose(available);
    if (!available.contains(i)) {
      throw Error(ErrorCode::InvalidArgument, "color chooser returned an unavailable color");
    }
    current = graph.pred_raw(current, i);
  }
}

VertexId pop_crystal(const ColoredDigraph& graph, VertexId v) {
  return pop_crystal_walk(graph, v, [](ColorSet s) { return s.first(); });
}

VertexId pop_crystal_by_component(const ColoredDigraph& graph, VertexId v) {
  const Component component =
      components_and_sources(LeviView(graph, down_colors(graph, v)), v);
  if (component.sources.size() != 1) {
    throw Error(ErrorCode::NotPoppable,
                "component of vertex " + std::to_string(v) + " has " +
                    std::to_string(component.sources.size()) + " sources");
  }
  return component.sources.front();
}

VertexId semilattice_pop(const ColoredDigraph& graph, const ReachabilityIndex& index,
                         VertexId v) {
  std::vector<VertexId> set{v};
  for (int i = 1; i <= graph.num_colors(); ++i) {
    const VertexId w = graph.pred_raw(v, i);
    if (w >= 0) set.push_back(w);
  }
  const auto m = meet(index, set);
  if (!m) {
    throw Error(ErrorCode::MeetUndefined,
                "vertex " + std::to_string(v) + " and its lower covers have no meet");
  }
  return *m;
}

OrbitReport orbit(VertexId start, const std::function<VertexId(VertexId)>& op,
                  std::size_t limit) {
  OrbitReport report;
  report.start = start;
  VertexId current = start;
  for (;;) {
    report.trajectory.push_back(current);
    if (report.trajectory.size() > limit) {
      throw Error(ErrorCode::NonTermination,
                  "orbit of vertex " + std::to_string(start) + " exceeds " +
                      std::to_string(limit) + " elements");
    }
    const VertexId next = op(current);
    if (next == current) return report;
    current = next;
  }
}

OrbitReport pop_orbit(const ColoredDigraph& graph, VertexId start) {
  return orbit(start, [&](VertexId v) { return pop_crystal(graph, v); }, graph.size());
}

std::vector<std::size_t> orbit_lengths(const ColoredDigraph& graph) {
  const std::size_t n = graph.size();
  std::vector<VertexId> image(n);
  for (std::size_t v = 0; v < n; ++v) image[v] = pop_crystal(graph, static_cast<VertexId>(v));
  std::vector<std::size_t> lengths(n, 0);
  std::vector<VertexId> stack;
  for (std::size_t v = 0; v < n; ++v) {
    auto current = static_cast<VertexId>(v);
    while (lengths[static_cast<std::size_t>(current)] == 0) {
      stack.push_back(current);
      if (stack.size() > n) {
        throw Error(ErrorCode::NonTermination, "Pop orbit does not reach a fixed point");
      }
      const VertexId next = image[static_cast<std::size_t>(current)];
      if (next == current) {
        lengths[static_cast<std::size_t>(current)] = 1;
        stack.pop_back();
        break;
      }
      current = next;
    }
    while (!stack.empty()) {
      const VertexId w = stack.back();
      stack.pop_back();
      lengths[static_cast<std::size_t>(w)] =
          lengths[static_cast<std::size_t>(image[static_cast<std::size_t>(w)])] + 1;
    }
  }
  return lengths;
}

MaxOrbit max_orbit_size(const ColoredDigraph& graph) {
  MaxOrbit best;
  const auto lengths = orbit_lengths(graph);
  for (std::size_t v = 0; v < lengths.size(); ++v) {
    if (lengths[v] > best.size) {
      best.size = lengths[v];
      best.witness = static_cast<VertexId>(v);
    }
  }
  return best;
}

Permutation pop_permutation(const Permutation& w) {
  std::vector<int> out = w.one_line();
  std::size_t start = 0;
  for (std::size_t k = 1; k <= out.size(); ++k) {
    if (k == out.size() || out[k - 1] < out[k]) {
      std::reverse(out.begin() + static_cast<std::ptrdiff_t>(start),
                   out.begin() + static_cast<std::ptrdiff_t>(k));
      start = k;
    }
  }
  return Permutation(std::move(out));
}

Permutation coxeter_pop(const Permutation& w) {
  // w_0(J) is an involution, so no inverse is needed.
  return w * longest_parabolic(right_descents(w), w.size());
}

std::vector<Permutation> permutation_orbit(const Permutation& w) {
  std::vector<Permutation> out{w};
  while (!out.back().is_identity()) out.push_back(coxeter_pop(out.back()));
  return out;
}

PermutationOrbitMax max_permutation_orbit(int m) {
  PermutationOrbitMax best;
  for (const Permutation& w : all_permutations(m)) {
    const std::size_t size = permutation_orbit(w).size();
    if (size > best.size) {
      best.size = size;
      best.witness = w;
    }
  }
  return best;
}

namespace {

VertexId find_root(std::vector<VertexId>& parent, VertexId v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    auto& p = parent[static_cast<std::size_t>(v)];
    p = parent[static_cast<std::size_t>(p)];
    v = p;
  }
  return v;
}

}  // namespace

bool is_poppable(const ColoredDigraph& graph) {
  const int n = graph.num_colors();
  if (n > 12) {
    throw Error(ErrorCode::InvalidArgument, "is_poppable enumerates color subsets only for n <= 12");
  }
  const std::size_t size = graph.size();
  std::vector<VertexId> parent(size);
  std::vector<int> sources(size);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const ColorSet colors = ColorSet::from_mask(mask << 1);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    for (std::size_t v = 0; v < size; ++v) {
      for (int i : colors.to_vector()) {
        const VertexId w = graph.succ_raw(static_cast<VertexId>(v), i);
        if (w < 0) continue;
        const VertexId a = find_root(parent, static_cast<VertexId>(v));
        const VertexId b = find_root(parent, w);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    std::fill(sources.begin(), sources.end(), 0);
    for (std::size_t v = 0; v < size; ++v) {
      if ((graph.in_colors(static_cast<VertexId>(v)) & colors).empty()) {
        if (++sources[static_cast<std::size_t>(find_root(parent, static_cast<VertexId>(v)))] > 1) {
          return false;
        }
      }
    }
  }
  return true;
}

bool pop_agreement_on_quotient(const CrystalGraph& b) {
  const auto points = embed_parabolic_quotient(b);
  for (const QuotientPoint& point : points) {
    const Permutation target = coxeter_pop(point.w);
    const auto it = std::find_if(points.begin(), points.end(),
                                 [&](const QuotientPoint& q) { return q.w == target; });
    if (it == points.end() || pop_crystal(b, point.vertex) != it->vertex) return false;
  }
  return true;
}

}  // namespace crystal_pop
