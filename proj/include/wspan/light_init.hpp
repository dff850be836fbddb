#pragma once

#include <algorithm>
#include <vector>

#include "wspan/graph.hpp"

namespace wspan {

/// The t-light initialization of a graph: every vertex selects its t lightest
/// incident edges (ties by neighbor id), and the kept edge set is the union of
/// all selections.
class LightInit {
 public:
  LightInit() = default;

  LightInit(const WeightedGraph& g, std::size_t t)
      : t_(t), selected_(g.num_vertices()), kept_(g.num_edges(), false) {
    if (t == 0) throw Error("light initialization needs t >= 1");
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      std::vector<Arc> arcs(g.neighbors(u).begin(), g.neighbors(u).end());
      const std::size_t take = std::min(t, arcs.size());
      std::partial_sort(arcs.begin(), arcs.begin() + take, arcs.end(),
                        [](const Arc& a, const Arc& b) {
                          return a.w != b.w ? a.w < b.w : a.to < b.to;
                        });
      arcs.resize(take);
      for (const auto& a : arcs) {
        if (!kept_[a.id]) {
          kept_[a.id] = true;
          kept_ids_.push_back(a.id);
        }
      }
      selected_[u] = std::move(arcs);
    }
    std::sort(kept_ids_.begin(), kept_ids_.end());
  }

  std::size_t t() const noexcept { return t_; }

  /// u's own selection, sorted by (weight, neighbor id).
  std::span<const Arc> light_neighbors(Vertex u) const { return selected_.at(u); }

  /// v is among the t lightest neighbors of u (u's side only).
  bool selected_by(Vertex u, Vertex v) const {
    const auto& s = selected_.at(u);
    return std::any_of(s.begin(), s.end(),
                       [v](const Arc& a) { return a.to == v; });
  }

  bool kept(EdgeId id) const { return kept_.at(id); }
  const std::vector<EdgeId>& kept_edges() const noexcept { return kept_ids_; }

 private:
  std::size_t t_ = 0;
  std::vector<std::vector<Arc>> selected_;
  std::vector<bool> kept_;
  std::vector<EdgeId> kept_ids_;
};

inline LightInit t_light_init(const WeightedGraph& g, std::size_t t) {
  return LightInit(g, t);
}

/// True iff {u,v} is an edge kept by the light initialization, from either
/// endpoint's selection.
inline bool is_t_light_neighbor(const LightInit& li, Vertex u, Vertex v) {
  return li.selected_by(u, v) || li.selected_by(v, u);
}

}  // namespace wspan
