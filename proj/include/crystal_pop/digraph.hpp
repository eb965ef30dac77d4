#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "crystal_pop/index_set.hpp"

namespace crystal_pop {

using VertexId = std::int32_t;

struct ColoredEdge {
  VertexId src = 0;
  VertexId dst = 0;
  int color = 0;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(a.src, a.color, a.dst) <=> std::tie(b.src, b.color, b.dst);
  }
};

/// Edge-colored digraph with at most one outgoing and one incoming edge of
/// each color at every vertex. Colors are 1..num_colors.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(std::size_t num_vertices, int num_colors);

  /// Throws Error(InvalidArgument) when an edge breaks the one-in/one-out
  /// rule or names an unknown vertex or color.
  static ColoredDigraph from_edges(std::size_t num_vertices, int num_colors,
                                   const std::vector<ColoredEdge>& edges);

  std::size_t size() const { return num_vertices_; }
  int num_colors() const { return num_colors_; }

  std::optional<VertexId> succ(VertexId v, int color) const {
    VertexId w = succ_[slot(v, color)];
    return w < 0 ? std::nullopt : std::optional<VertexId>(w);
  }
  std::optional<VertexId> pred(VertexId v, int color) const {
    VertexId w = pred_[slot(v, color)];
    return w < 0 ? std::nullopt : std::optional<VertexId>(w);
  }
  /// Raw successor, -1 when absent.
  VertexId succ_raw(VertexId v, int color) const { return succ_[slot(v, color)]; }
  VertexId pred_raw(VertexId v, int color) const { return pred_[slot(v, color)]; }

  /// Colors of incoming edges.
  ColorSet in_colors(VertexId v) const;
  ColorSet out_colors(VertexId v) const;

  /// All edges ordered by (src, color).
  std::vector<ColoredEdge> edges() const;
  std::size_t num_edges() const;

 protected:
  void set_edge(VertexId src, VertexId dst, int color);
  void add_vertex();

 private:
  std::size_t slot(VertexId v, int color) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(num_colors_) +
           static_cast<std::size_t>(color - 1);
  }

  std::size_t num_vertices_ = 0;
  int num_colors_ = 0;
  std::vector<VertexId> succ_;
  std::vector<VertexId> pred_;
};

/// The digraph with only the edges whose colors lie in `colors`.
class LeviView {
 public:
  LeviView(const ColoredDigraph& graph, ColorSet colors)
      : graph_(&graph), colors_(colors & ColorSet::range(graph.num_colors())) {}

  const ColoredDigraph& graph() const { return *graph_; }
  ColorSet colors() const { return colors_; }
  std::size_t size() const { return graph_->size(); }

  std::optional<VertexId> succ(VertexId v, int color) const {
    if (!colors_.contains(color)) return std::nullopt;
    return graph_->succ(v, color);
  }
  std::optional<VertexId> pred(VertexId v, int color) const {
    if (!colors_.contains(color)) return std::nullopt;
    return graph_->pred(v, color);
  }
  bool is_source(VertexId v) const {
    return (graph_->in_colors(v) & colors_).empty();
  }

 private:
  const ColoredDigraph* graph_;
  ColorSet colors_;
};

inline LeviView levi_restrict(const ColoredDigraph& graph, ColorSet colors) {
  return LeviView(graph, colors);
}

}  // namespace crystal_pop
