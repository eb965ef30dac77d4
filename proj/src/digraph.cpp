#include "crystal_pop/digraph.hpp"

#include <string>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

ColoredDigraph::ColoredDigraph(std::size_t num_vertices, int num_colors)
    : num_vertices_(num_vertices),
      num_colors_(num_colors),
      succ_(num_vertices * static_cast<std::size_t>(num_colors), -1),
      pred_(num_vertices * static_cast<std::size_t>(num_colors), -1) {
  if (num_colors < 0 || num_colors > IndexSet::kMaxIndex) {
    throw Error(ErrorCode::InvalidArgument,
                "number of colors must lie in [0," +
                    std::to_string(IndexSet::kMaxIndex) + "]");
  }
}

ColoredDigraph ColoredDigraph::from_edges(std::size_t num_vertices, int num_colors,
                                          const std::vector<ColoredEdge>& edges) {
  ColoredDigraph g(num_vertices, num_colors);
  for (const ColoredEdge& e : edges) {
    if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= num_vertices ||
        static_cast<std::size_t>(e.dst) >= num_vertices) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.color < 1 || e.color > num_colors) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge color " + std::to_string(e.color) + " out of range");
    }
    if (g.succ_raw(e.src, e.color) >= 0 || g.pred_raw(e.dst, e.color) >= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "two edges of color " + std::to_string(e.color) +
                      " share an endpoint");
    }
    g.set_edge(e.src, e.dst, e.color);
  }
  return g;
}

ColorSet ColoredDigraph::in_colors(VertexId v) const {
  ColorSet out;
  for (int i = 1; i <= num_colors_; ++i) {
    if (pred_raw(v, i) >= 0) out.insert(i);
  }
  return out;
}

ColorSet ColoredDigraph::out_colors(VertexId v) const {
  ColorSet out;
  for (int i = 1; i <= num_colors_; ++i) {
    if (succ_raw(v, i) >= 0) out.insert(i);
  }
  return out;
}

std::vector<ColoredEdge> ColoredDigraph::edges() const {
  std::vector<ColoredEdge> out;
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    for (int i = 1; i <= num_colors_; ++i) {
      VertexId w = succ_raw(static_cast<VertexId>(v), i);
      if (w >= 0) out.push_back({static_cast<VertexId>(v), w, i});
    }
  }
  return out;
}

std::size_t ColoredDigraph::num_edges() const {
  std::size_t count = 0;
  for (VertexId w : succ_) count += w >= 0 ? 1 : 0;
  return count;
}

void ColoredDigraph::set_edge(VertexId src, VertexId dst, int color) {
  succ_[slot(src, color)] = dst;
  pred_[slot(dst, color)] = src;
}

void ColoredDigraph::add_vertex() {
  ++num_vertices_;
  succ_.resize(succ_.size() + static_cast<std::size_t>(num_colors_), -1);
  pred_.resize(pred_.size() + static_cast<std::size_t>(num_colors_), -1);
}

}  // namespace crystal_pop
