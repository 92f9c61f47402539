#ifndef SUBDEPTH_GRAPH_HPP
#define SUBDEPTH_GRAPH_HPP

// Bicolored bipartite graph of an inclusion matrix, and the diameter
// formulas for odd, even and H-depth. Works only on the edge set, so it is
// independent of the bracketed-power engine in depth.hpp.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subdepth/inclusion_matrix.hpp"

namespace subdepth {

class BipartiteGraph {
public:
  static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

  /// Black vertices are the rows (B-simples), white vertices the columns
  /// (A-simples); multiplicities are flattened to single edges.
  explicit BipartiteGraph(const InclusionMatrix& m)
      : black_(m.rows()), white_(m.cols()), adjacency_(m.rows() + m.cols()) {
    for (std::size_t i = 0; i < black_; ++i)
      for (std::size_t j = 0; j < white_; ++j)
        if (m.matrix()(i, j) > 0) {
          adjacency_[i].push_back(black_ + j);
          adjacency_[black_ + j].push_back(i);
          edges_.emplace_back(i, j);
        }
    distances_.reserve(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) distances_.push_back(bfs(v));
  }

  std::size_t black_count() const noexcept { return black_; }
  std::size_t white_count() const noexcept { return white_; }
  /// (black, white) pairs, ordered by black then white index.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  std::size_t black_vertex(std::size_t i) const noexcept { return i; }
  std::size_t white_vertex(std::size_t j) const noexcept { return black_ + j; }

  /// Edge distance between two vertices, or `unreachable`.
  std::size_t distance(std::size_t u, std::size_t v) const { return distances_[u][v]; }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

private:
  std::vector<std::size_t> bfs(std::size_t source) const {
    std::vector<std::size_t> dist(adjacency_.size(), unreachable);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacency_[u])
        if (dist[v] == unreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }

  std::size_t black_ = 0;
  std::size_t white_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> distances_;
};

inline BipartiteGraph build_graph(const InclusionMatrix& m) { return BipartiteGraph(m); }

namespace detail {

// Largest finite distance between two vertices of the index range
// [first, first + count).
inline std::size_t row_diameter(const BipartiteGraph& g, std::size_t first, std::size_t count) {
  std::size_t diameter = 0;
  for (std::size_t a = first; a < first + count; ++a)
    for (std::size_t b = a + 1; b < first + count; ++b) {
      std::size_t d = g.distance(a, b);
      if (d != BipartiteGraph::unreachable) diameter = std::max(diameter, d);
    }
  return diameter;
}

}  // namespace detail

/// Diameter in edges of the black row; pairs in different components are skipped.
inline std::size_t black_diameter(const BipartiteGraph& g) {
  return detail::row_diameter(g, 0, g.black_count());
}

inline std::size_t white_diameter(const BipartiteGraph& g) {
  return detail::row_diameter(g, g.black_count(), g.white_count());
}

inline std::size_t min_odd_depth_graph(const BipartiteGraph& g) { return 1 + black_diameter(g); }

/// 2 plus the largest distance from a black vertex to the merged class of
/// blacks lying under a single white vertex.
inline std::size_t min_even_depth_graph(const BipartiteGraph& g) {
  std::size_t worst = 0;
  for (std::size_t i = 0; i < g.black_count(); ++i)
    for (std::size_t w = 0; w < g.white_count(); ++w) {
      std::size_t to_class = BipartiteGraph::unreachable;
      for (std::size_t k : g.neighbors(g.white_vertex(w)))
        to_class = std::min(to_class, g.distance(g.black_vertex(i), k));
      if (to_class != BipartiteGraph::unreachable) worst = std::max(worst, to_class);
    }
  return 2 + worst;
}

/// Odd depth of the graph reflected about the white row.
inline std::size_t min_hdepth_graph(const BipartiteGraph& g) { return 1 + white_diameter(g); }

/// Graphviz text; blacks b1..br filled, whites w1..ws, edges in index order.
inline std::string to_dot(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "graph inclusion {\n";
  for (std::size_t i = 0; i < g.black_count(); ++i)
    os << "  b" << i + 1 << " [style=filled, fillcolor=black, fontcolor=white];\n";
  for (std::size_t j = 0; j < g.white_count(); ++j) os << "  w" << j + 1 << ";\n";
  for (const auto& [b, w] : g.edges()) os << "  b" << b + 1 << " -- w" << w + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace subdepth

#endif  // SUBDEPTH_GRAPH_HPP
