#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wspan {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One direction of an edge in an adjacency list.
struct Arc {
  Vertex to;
  Weight w;
  EdgeId id;
};

inline std::uint64_t pair_key(Vertex a, Vertex b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Simple undirected graph with strictly positive edge weights on vertices
/// 0..n-1. Adjacency lists are kept sorted by neighbor id.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : adj_(n) {}

  WeightedGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    edges_.reserve(edges.size());
    for (const auto& e : edges) add_edge(e.u, e.v, e.w);
  }

  /// Adds {u,v} with weight w. Rejects self-loops, parallel edges, ids out of
  /// range and weights that are not finite and strictly positive.
  EdgeId add_edge(Vertex u, Vertex v, Weight w) {
    if (u >= num_vertices() || v >= num_vertices())
      throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                  std::to_string(v));
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0) || !std::isfinite(w))
      throw Error("edge weight must be finite and positive");
    if (u > v) std::swap(u, v);
    const auto key = pair_key(u, v);
    if (index_.contains(key))
      throw Error("parallel edge " + std::to_string(u) + " " +
                  std::to_string(v));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, w});
    index_.emplace(key, id);
    insert_arc(u, {v, w, id});
    insert_arc(v, {u, w, id});
    return id;
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Arc> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    auto it = index_.find(pair_key(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Weight> weight(Vertex a, Vertex b) const {
    if (auto id = find_edge(a, b)) return edges_[*id].w;
    return std::nullopt;
  }

  Weight min_weight() const {
    Weight m = kInfinity;
    for (const auto& e : edges_) m = std::min(m, e.w);
    return m;
  }

  Weight max_weight() const {
    Weight m = 0.0;
    for (const auto& e : edges_) m = std::max(m, e.w);
    return m;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  /// Same vertex set and identical weighted edge sets.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
      return false;
    for (const auto& e : a.edges_) {
      auto w = b.weight(e.u, e.v);
      if (!w || *w != e.w) return false;
    }
    return true;
  }

 private:
  void insert_arc(Vertex from, Arc arc) {
    auto& list = adj_[from];
    auto pos = std::lower_bound(
        list.begin(), list.end(), arc.to,
        [](const Arc& a, Vertex to) { return a.to < to; });
    list.insert(pos, arc);
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Divides every weight by the minimum weight so the lightest edge weighs 1.
inline WeightedGraph normalize_weights(const WeightedGraph& g) {
  if (g.num_edges() == 0) throw Error("no edges to normalize");
  const Weight lo = g.min_weight();
  if (!(lo > 0.0)) throw Error("nonpositive edge weight");
  WeightedGraph out(g.num_vertices());
  for (const auto& e : g.edges()) {
    // Exact division keeps the minimum at exactly 1.
    out.add_edge(e.u, e.v, lo == 1.0 ? e.w : e.w / lo);
  }
  return out;
}

/// The subgraph of `g` spanned by the given edge ids, keeping original weights.
inline WeightedGraph edge_subgraph(const WeightedGraph& g,
                                   std::span<const EdgeId> ids) {
  WeightedGraph h(g.num_vertices());
  for (auto id : ids) {
    const auto& e = g.edge(id);
    h.add_edge(e.u, e.v, e.w);
  }
  return h;
}

/// Component label per vertex; labels are 0..k-1 in order of smallest member.
inline std::vector<std::uint32_t> connected_components(const WeightedGraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.num_vertices(), kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& a : g.neighbors(v)) {
        if (comp[a.to] == kUnset) {
          comp[a.to] = next;
          stack.push_back(a.to);
        }
      }
    }
    ++next;
  }
  return comp;
}

/// The largest connected component, relabeled to 0..k-1 preserving order.
/// Ties between equally large components go to the one with the smallest id.
inline WeightedGraph largest_component(const WeightedGraph& g) {
  if (g.num_vertices() == 0) return g;
  auto comp = connected_components(g);
  std::vector<std::size_t> sizes;
  for (auto c : comp) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> relabel(g.num_vertices(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (comp[v] == best) relabel[v] = next++;
  WeightedGraph out(next);
  for (const auto& e : g.edges())
    if (comp[e.u] == best) out.add_edge(relabel[e.u], relabel[e.v], e.w);
  return out;
}

/// Growable edge subset of a fixed host graph. Used by the constructions to
/// hold the spanner under construction.
class EdgeSubgraph {
 public:
  explicit EdgeSubgraph(const WeightedGraph& host)
      : host_(&host), adj_(host.num_vertices()), in_(host.num_edges(), false) {}

  /// Returns true if the edge was not already present.
  bool add(EdgeId id) {
    if (in_.at(id)) return false;
    in_[id] = true;
    const auto& e = host_->edge(id);
    adj_[e.u].push_back({e.v, e.w, id});
    adj_[e.v].push_back({e.u, e.w, id});
    ++size_;
    return true;
  }

  /// Adds every edge along a vertex path; returns the number of new edges.
  std::size_t add_path(std::span<const Vertex> path) {
    std::size_t added = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto id = host_->find_edge(path[i], path[i + 1]);
      if (!id) throw Error("path uses a non-edge");
      added += add(*id) ? 1 : 0;
    }
    return added;
  }

  bool contains(EdgeId id) const { return in_.at(id); }
  std::size_t size() const noexcept { return size_; }
  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::span<const Arc> neighbors(Vertex v) const { return adj_[v]; }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(size_);
    for (EdgeId id = 0; id < in_.size(); ++id)
      if (in_[id]) ids.push_back(id);
    return ids;
  }

  const WeightedGraph& host() const noexcept { return *host_; }

 private:
  const WeightedGraph* host_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<bool> in_;
  std::size_t size_ = 0;
};

}  // namespace wspan
