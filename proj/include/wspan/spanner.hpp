#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "wspan/graph.hpp"

namespace wspan {

struct PhaseCount {
  std::string phase;
  std::size_t new_edges = 0;
};

/// Per-level sizes recorded by the randomized +2W construction.
struct LevelCounts {
  std::size_t level = 0;
  std::size_t v_size = 0;  // |V_i|
  std::size_t d_size = 0;  // |D_i|
  std::size_t e_size = 0;  // |E_i|
};

struct VertexPair {
  Vertex u;
  Vertex v;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// A spanning subgraph produced by one of the constructions.
struct SpannerResult {
  std::string algo;
  std::vector<std::pair<std::string, double>> params;
  std::vector<EdgeId> edges;  // ids into the input graph, ascending
  std::vector<VertexPair> paths_added;  // in processing order
  std::vector<PhaseCount> phases;
  std::vector<LevelCounts> levels;

  double param(const std::string& name) const {
    for (const auto& [k, v] : params)
      if (k == name) return v;
    throw Error("no such parameter: " + name);
  }
};

inline WeightedGraph to_graph(const WeightedGraph& g, const SpannerResult& r) {
  return edge_subgraph(g, r.edges);
}

/// Smallest integer t >= 1 with t >= x, snapping values within 1e-9 of an
/// integer so that e.g. 64^(1/3) gives 4 and not 5.
inline std::size_t ceil_snap(double x) {
  double r = std::round(x);
  double c = std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : std::ceil(x);
  return static_cast<std::size_t>(std::max(1.0, c));
}

/// ceil(n^e) for the light-initialization degrees.
inline std::size_t ceil_pow(std::size_t n, double e) {
  return ceil_snap(std::pow(static_cast<double>(n), e));
}

}  // namespace wspan
