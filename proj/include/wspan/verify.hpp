#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/shortest_paths.hpp"

namespace wspan {

// Exact stretch certification by full all-pairs shortest paths on both the
// input graph and the candidate spanner or emulator.

inline constexpr double kRelTolerance = 1e-9;

enum class BoundKind { kAdditiveW, kMultiplicative, kNonContracting };
enum class ViolationKind { kStretch, kUnreachable, kContracting };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kAdditiveW: return "additive-cW";
    case BoundKind::kMultiplicative: return "multiplicative";
    case BoundKind::kNonContracting: return "non-contracting";
  }
  return "?";
}

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kStretch: return "stretch";
    case ViolationKind::kUnreachable: return "unreachable";
    case ViolationKind::kContracting: return "contracting";
  }
  return "?";
}

struct Violation {
  Vertex u;
  Vertex v;
  Weight d_g;
  Weight d_h;
  Weight w_uv;
  Weight slack;  // d_H - d_G
  ViolationKind kind;
};

/// Canonical W versus the smallest heaviest edge over all shortest paths.
struct MinimaxCheck {
  std::size_t pairs_with_gap = 0;  // canonical W strictly above the minimax W
  double max_gap = 0.0;
};

struct StretchReport {
  BoundKind kind = BoundKind::kAdditiveW;
  double factor = 0.0;  // c for additive bounds, alpha for multiplicative
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
  double max_slack_ratio = 0.0;  // max (d_H - d_G) / W_{u,v}
  std::size_t size = 0;          // edge count of the checked graph
  std::optional<MinimaxCheck> minimax;

  bool passed() const noexcept { return violations.empty(); }
};

/// Which unordered pairs a check covers.
struct PairClass {
  std::optional<std::vector<Vertex>> subset;

  static PairClass all() { return {}; }
  static PairClass within(std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return {std::move(s)};
  }
};

namespace detail {

inline void check_same_vertices(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.num_vertices() != h.num_vertices())
    throw Error("vertex-set mismatch: " + std::to_string(g.num_vertices()) + " vs " +
                std::to_string(h.num_vertices()));
}

template <typename Fn>
void for_pairs(std::size_t n, const PairClass& pc, Fn&& fn) {
  if (pc.subset) {
    const auto& s = *pc.subset;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n) throw Error("subset vertex out of range");
      for (std::size_t j = i + 1; j < s.size(); ++j) fn(s[i], s[j]);
    }
    return;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) fn(u, v);
}

inline bool exceeds(Weight value, Weight bound) {
  return value > bound + kRelTolerance * std::abs(bound);
}

}  // namespace detail

/// For every pair, the minimum over all shortest u-v paths of the heaviest
/// edge, by dynamic programming over tight edges in distance order.
inline std::vector<Weight> minimax_shortest_path_weight(const WeightedGraph& g,
                                                        std::span<const Weight> dist) {
  const std::size_t n = g.num_vertices();
  std::vector<Weight> out(n * n, kInfinity);
  std::vector<Vertex> order(n);
  for (Vertex s = 0; s < n; ++s) {
    const Weight* ds = dist.data() + s * n;
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ds[a] < ds[b]; });
    Weight* row = out.data() + s * n;
    row[s] = 0.0;
    for (Vertex v : order) {
      if (v == s || ds[v] == kInfinity) continue;
      for (const auto& a : g.neighbors(v)) {
        const Weight via = ds[a.to] + a.w;
        const bool tight = std::abs(via - ds[v]) <= kRelTolerance * ds[v];
        if (tight && ds[a.to] < ds[v])
          row[v] = std::min(row[v], std::max(row[a.to], a.w));
      }
    }
  }
  return out;
}

inline MinimaxCheck compare_canonical_to_minimax(const ShortestPathIndex& idx) {
  const std::size_t n = idx.num_vertices();
  std::vector<Weight> dist(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) dist[u * n + v] = idx.dist(u, v);
  const auto mm = minimax_shortest_path_weight(idx.graph(), dist);
  MinimaxCheck c;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!idx.connected(u, v)) continue;
      const double gap = idx.max_weight(u, v) - mm[u * n + v];
      if (gap > 0.0) {
        ++c.pairs_with_gap;
        c.max_gap = std::max(c.max_gap, gap);
      }
    }
  }
  return c;
}

/// Graphs up to this size also get the canonical-versus-minimax W check.
inline constexpr std::size_t kMinimaxCheckLimit = 10;

/// Checks d_H(u,v) <= d_G(u,v) + c(n) * W_{u,v} on every pair of the class
/// that is connected in G.
inline StretchReport verify_additive_W(const ShortestPathIndex& gidx, const WeightedGraph& h,
                                       const std::function<double(std::size_t)>& c_of_n,
                                       const PairClass& pairs = PairClass::all(),
                                       unsigned threads = 1) {
  const auto& g = gidx.graph();
  detail::check_same_vertices(g, h);
  const std::size_t n = g.num_vertices();
  StretchReport rep;
  rep.kind = BoundKind::kAdditiveW;
  rep.factor = c_of_n(n);
  rep.size = h.num_edges();
  const auto dh = all_pairs_distances(h, threads);
  detail::for_pairs(n, pairs, [&](Vertex u, Vertex v) {
    if (!gidx.connected(u, v)) return;
    ++rep.pairs_checked;
    const Weight dg = gidx.dist(u, v);
    const Weight d = dh[u * n + v];
    const Weight w = gidx.max_weight(u, v);
    if (d == kInfinity) {
      rep.violations.push_back({u, v, dg, d, w, kInfinity, ViolationKind::kUnreachable});
      rep.max_slack_ratio = kInfinity;
      return;
    }
    if (w > 0.0) rep.max_slack_ratio = std::max(rep.max_slack_ratio, (d - dg) / w);
    if (detail::exceeds(d, dg + rep.factor * w))
      rep.violations.push_back({u, v, dg, d, w, d - dg, ViolationKind::kStretch});
  });
  if (n <= kMinimaxCheckLimit) rep.minimax = compare_canonical_to_minimax(gidx);
  return rep;
}

inline StretchReport verify_additive_W(const WeightedGraph& g, const WeightedGraph& h,
                                       double c, const PairClass& pairs = PairClass::all()) {
  detail::check_same_vertices(g, h);
  return verify_additive_W(build_index(g), h, [c](std::size_t) { return c; }, pairs);
}

/// Checks d_H(u,v) <= alpha * d_G(u,v) on all pairs connected in G.
inline StretchReport verify_multiplicative(const ShortestPathIndex& gidx,
                                           const WeightedGraph& h, double alpha,
                                           unsigned threads = 1) {
  if (!(alpha >= 1.0)) throw Error("alpha must be >= 1");
  const auto& g = gidx.graph();
  detail::check_same_vertices(g, h);
  const std::size_t n = g.num_vertices();
  StretchReport rep;
  rep.kind = BoundKind::kMultiplicative;
  rep.factor = alpha;
  rep.size = h.num_edges();
  const auto dh = all_pairs_distances(h, threads);
  detail::for_pairs(n, PairClass::all(), [&](Vertex u, Vertex v) {
    if (!gidx.connected(u, v)) return;
    ++rep.pairs_checked;
    const Weight dg = gidx.dist(u, v);
    const Weight d = dh[u * n + v];
    const Weight w = gidx.max_weight(u, v);
    if (d == kInfinity) {
      rep.violations.push_back({u, v, dg, d, w, kInfinity, ViolationKind::kUnreachable});
      rep.max_slack_ratio = kInfinity;
      return;
    }
    if (w > 0.0) rep.max_slack_ratio = std::max(rep.max_slack_ratio, (d - dg) / w);
    if (detail::exceeds(d, alpha * dg))
      rep.violations.push_back({u, v, dg, d, w, d - dg, ViolationKind::kStretch});
  });
  return rep;
}

inline StretchReport verify_multiplicative(const WeightedGraph& g, const WeightedGraph& h,
                                           double alpha) {
  detail::check_same_vertices(g, h);
  return verify_multiplicative(build_index(g), h, alpha);
}

/// True iff every edge of h is an edge of g with the identical weight.
inline bool verify_subgraph(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.num_vertices() != h.num_vertices()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    auto w = g.weight(e.u, e.v);
    return w && *w == e.w;
  });
}

/// Checks d_H(u,v) >= d_G(u,v) (relative tolerance 1e-9) on every pair.
/// Pairs disconnected in G must stay disconnected in H.
inline StretchReport verify_non_contracting(const WeightedGraph& g, const WeightedGraph& h,
                                            unsigned threads = 1) {
  detail::check_same_vertices(g, h);
  const std::size_t n = g.num_vertices();
  StretchReport rep;
  rep.kind = BoundKind::kNonContracting;
  rep.factor = 1.0;
  rep.size = h.num_edges();
  const auto dg = all_pairs_distances(g, threads);
  const auto dh = all_pairs_distances(h, threads);
  detail::for_pairs(n, PairClass::all(), [&](Vertex u, Vertex v) {
    ++rep.pairs_checked;
    const Weight a = dg[u * n + v];
    const Weight b = dh[u * n + v];
    const bool contracting = a == kInfinity ? b != kInfinity : b < a - kRelTolerance * a;
    if (contracting)
      rep.violations.push_back({u, v, a, b, 0.0, b - a, ViolationKind::kContracting});
  });
  return rep;
}

/// Least-squares slope of log(edge_count) against log(n).
inline double size_scaling_fit(std::span<const std::pair<double, double>> records) {
  std::set<double> distinct;
  for (const auto& [n, m] : records) {
    if (!(n > 0.0) || !(m > 0.0)) throw Error("scaling fit needs positive values");
    distinct.insert(n);
  }
  if (distinct.size() < 3) throw Error("scaling fit needs at least 3 distinct n values");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(records.size());
  for (const auto& [n, m] : records) {
    const double x = std::log(n), y = std::log(m);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace wspan
