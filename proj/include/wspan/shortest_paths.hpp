#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <thread>
#include <utility>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/rng.hpp"

namespace wspan {

// Canonical shortest paths.
//
// A path is ranked by the key (length, hop count, tie sum), compared
// lexicographically, where the tie sum adds a fixed pseudo-random 40-bit
// value per edge. The key is additive along paths and positive on every edge,
// so Dijkstra computes the minimum exactly, and with distinct tie sums the
// minimum path is unique. Unique minimum paths are closed under subpaths and
// reversal, and two of them meet in at most one contiguous run. If two paths
// still share the full key, the predecessor with the smaller id wins.

/// Per-edge tie value in [1, 2^40]; symmetric in its endpoints.
inline std::uint64_t edge_tiebreak_key(Vertex a, Vertex b) noexcept {
  return (splitmix64(pair_key(a, b)) >> 24) + 1;
}

struct PathKey {
  Weight dist = kInfinity;
  std::uint32_t hops = 0;
  std::uint64_t tie = 0;

  friend auto operator<=>(const PathKey&, const PathKey&) = default;
  friend bool operator==(const PathKey&, const PathKey&) = default;
};

struct SsspResult {
  std::vector<Weight> dist;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> hops;
  /// Vertices in the order they were settled (reachable ones only).
  std::vector<Vertex> order;
};

/// Canonical Dijkstra over any adjacency provider `nbrs(v)` yielding Arcs.
template <typename Neighbors>
SsspResult canonical_dijkstra(std::size_t n, Vertex source, Neighbors&& nbrs) {
  std::vector<PathKey> key(n);
  SsspResult r;
  r.parent.assign(n, kNoVertex);
  r.order.reserve(n);
  std::vector<bool> done(n, false);

  using Item = std::pair<PathKey, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  key[source] = {0.0, 0, 0};
  pq.push({key[source], source});
  while (!pq.empty()) {
    auto [k, u] = pq.top();
    pq.pop();
    if (done[u] || k != key[u]) continue;
    done[u] = true;
    r.order.push_back(u);
    for (const Arc& a : nbrs(u)) {
      if (done[a.to]) continue;
      PathKey cand{k.dist + a.w, k.hops + 1,
                   k.tie + edge_tiebreak_key(u, a.to)};
      if (cand < key[a.to]) {
        key[a.to] = cand;
        r.parent[a.to] = u;
        pq.push({cand, a.to});
      } else if (cand == key[a.to] && u < r.parent[a.to]) {
        r.parent[a.to] = u;
      }
    }
  }
  r.dist.resize(n);
  r.hops.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    r.dist[v] = key[v].dist;
    r.hops[v] = key[v].hops;
  }
  return r;
}

/// Single-source canonical shortest paths in `g` from `s`.
inline SsspResult sssp_canonical(const WeightedGraph& g, Vertex s) {
  if (s >= g.num_vertices()) throw Error("source out of range");
  return canonical_dijkstra(g.num_vertices(), s,
                            [&g](Vertex v) { return g.neighbors(v); });
}

/// Plain Dijkstra distances with reusable buffers. Only distances, no
/// tie-breaking; used for spanner distance queries.
class DistanceSearch {
 public:
  explicit DistanceSearch(std::size_t n) : dist_(n, kInfinity) {}

  /// Full single-source distances into `out`.
  template <typename Neighbors>
  void all_from(Vertex s, Neighbors&& nbrs, std::vector<Weight>& out) {
    run(s, kNoVertex, kInfinity, nbrs);
    out.assign(dist_.size(), kInfinity);
    for (auto v : touched_) out[v] = dist_[v];
    reset();
  }

  /// Distance from s to t if it is at most `bound`, otherwise infinity.
  template <typename Neighbors>
  Weight to_target(Vertex s, Vertex t, Weight bound, Neighbors&& nbrs) {
    Weight d = run(s, t, bound, nbrs);
    reset();
    return d;
  }

 private:
  template <typename Neighbors>
  Weight run(Vertex s, Vertex target, Weight bound, Neighbors& nbrs) {
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist_[s] = 0.0;
    touched_.push_back(s);
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d != dist_[u]) continue;
      if (d > bound) return kInfinity;
      if (u == target) return d;
      for (const Arc& a : nbrs(u)) {
        Weight nd = d + a.w;
        if (nd < dist_[a.to]) {
          if (dist_[a.to] == kInfinity) touched_.push_back(a.to);
          dist_[a.to] = nd;
          pq.push({nd, a.to});
        }
      }
    }
    return target == kNoVertex ? 0.0 : kInfinity;
  }

  void reset() {
    for (auto v : touched_) dist_[v] = kInfinity;
    touched_.clear();
  }

  std::vector<Weight> dist_;
  std::vector<Vertex> touched_;
};

/// Runs `fn(s)` for every s in [0, n) on up to `threads` workers (0 = auto).
template <typename Fn>
void parallel_for_sources(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t s = 0; s < n; ++s) fn(static_cast<Vertex>(s));
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t s = t; s < n; s += threads) fn(static_cast<Vertex>(s));
    });
  }
}

/// A canonical shortest path with its length and heaviest edge.
struct CanonicalPath {
  std::vector<Vertex> vertices;
  Weight total_weight = 0.0;
  Weight max_edge_weight = 0.0;
};

/// All-pairs canonical shortest paths: distances, per-pair heaviest edge on
/// the canonical path, and the per-source predecessor trees.
class ShortestPathIndex {
 public:
  ShortestPathIndex() = default;

  explicit ShortestPathIndex(std::shared_ptr<const WeightedGraph> g,
                             unsigned threads = 1)
      : graph_(std::move(g)), n_(graph_->num_vertices()) {
    dist_.assign(n_ * n_, kInfinity);
    heaviest_.assign(n_ * n_, 0.0);
    parent_.assign(n_ * n_, kNoVertex);
    parallel_for_sources(n_, threads, [this](Vertex s) { fill_row(s); });
  }

  std::size_t num_vertices() const noexcept { return n_; }
  const WeightedGraph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const WeightedGraph> graph_ptr() const noexcept {
    return graph_;
  }

  Weight dist(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  /// W_{u,v}: the heaviest edge weight on the canonical u-v path.
  Weight max_weight(Vertex u, Vertex v) const { return heaviest_[u * n_ + v]; }
  Vertex parent(Vertex source, Vertex v) const { return parent_[source * n_ + v]; }
  bool connected(Vertex u, Vertex v) const { return dist(u, v) != kInfinity; }

  std::span<const Weight> dist_row(Vertex u) const {
    return {dist_.data() + u * n_, n_};
  }

 private:
  void fill_row(Vertex s) {
    auto r = sssp_canonical(*graph_, s);
    const std::size_t base = s * n_;
    for (Vertex v : r.order) {
      dist_[base + v] = r.dist[v];
      parent_[base + v] = r.parent[v];
      if (v != s) {
        Vertex p = r.parent[v];
        Weight w = *graph_->weight(p, v);
        heaviest_[base + v] = std::max(heaviest_[base + p], w);
      }
    }
  }

  std::shared_ptr<const WeightedGraph> graph_;
  std::size_t n_ = 0;
  std::vector<Weight> dist_;
  std::vector<Weight> heaviest_;
  std::vector<Vertex> parent_;
};

inline ShortestPathIndex build_index(const WeightedGraph& g,
                                     unsigned threads = 1) {
  return ShortestPathIndex(std::make_shared<const WeightedGraph>(g), threads);
}

/// Reconstructs the canonical u-v path from u's predecessor tree.
inline CanonicalPath canonical_path(const ShortestPathIndex& idx, Vertex u,
                                    Vertex v) {
  if (u >= idx.num_vertices() || v >= idx.num_vertices())
    throw Error("vertex out of range");
  if (!idx.connected(u, v)) throw Error("no path");
  CanonicalPath p;
  for (Vertex x = v; x != u; x = idx.parent(u, x)) p.vertices.push_back(x);
  p.vertices.push_back(u);
  std::reverse(p.vertices.begin(), p.vertices.end());
  const auto& g = idx.graph();
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    Weight w = *g.weight(p.vertices[i], p.vertices[i + 1]);
    p.total_weight += w;
    p.max_edge_weight = std::max(p.max_edge_weight, w);
  }
  return p;
}

/// Distances only, all pairs, via repeated plain Dijkstra. Row-major n x n.
inline std::vector<Weight> all_pairs_distances(const WeightedGraph& g,
                                               unsigned threads = 1) {
  const std::size_t n = g.num_vertices();
  std::vector<Weight> d(n * n, kInfinity);
  parallel_for_sources(n, threads, [&](Vertex s) {
    DistanceSearch search(n);
    std::vector<Weight> row;
    search.all_from(s, [&g](Vertex v) { return g.neighbors(v); }, row);
    std::copy(row.begin(), row.end(), d.begin() + s * n);
  });
  return d;
}

}  // namespace wspan
