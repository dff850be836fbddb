#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <tuple>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/light_init.hpp"
#include "wspan/shortest_paths.hpp"
#include "wspan/spanner.hpp"

namespace wspan {

enum class PairOrderMode {
  kWeightThenDistance,  // (W, d_G, min id, max id)
  kWeightOnly,          // (W, min id, max id)
};

/// Sorts pairs into the greedy scan order. Pairs are normalized to u < v.
inline std::vector<VertexPair> make_pair_order(const ShortestPathIndex& idx,
                                               std::vector<VertexPair> pairs,
                                               PairOrderMode mode) {
  for (auto& p : pairs)
    if (p.u > p.v) std::swap(p.u, p.v);
  auto key = [&](const VertexPair& p) {
    const double w = idx.max_weight(p.u, p.v);
    const double d = mode == PairOrderMode::kWeightThenDistance ? idx.dist(p.u, p.v) : 0.0;
    return std::tuple(w, d, p.u, p.v);
  };
  std::sort(pairs.begin(), pairs.end(),
            [&](const VertexPair& a, const VertexPair& b) { return key(a) < key(b); });
  return pairs;
}

/// All unordered pairs u < v that are connected in G.
inline std::vector<VertexPair> connected_pairs(const ShortestPathIndex& idx) {
  std::vector<VertexPair> out;
  const auto n = static_cast<Vertex>(idx.num_vertices());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (idx.connected(u, v)) out.push_back({u, v});
  return out;
}

/// Connected pairs within a vertex subset (duplicates in `subset` ignored).
inline std::vector<VertexPair> connected_pairs(const ShortestPathIndex& idx,
                                               std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (idx.connected(s[i], s[j])) out.push_back({s[i], s[j]});
  return out;
}

namespace detail {

/// Scans pairs in order and buys the canonical path whenever
/// d_H(u,v) > d_G(u,v) + allowance(u,v).
///
/// Spanner distances come from per-source rows that are refreshed lazily.
/// H only grows, so a row computed earlier is an upper bound on the current
/// distances: a stale value at or under the threshold already settles the
/// pair, and only a stale value over it forces a fresh search.
template <typename Allowance>
void buy_paths(const ShortestPathIndex& idx, EdgeSubgraph& h,
               std::span<const VertexPair> order, Allowance&& allowance,
               SpannerResult& out) {
  const std::size_t n = idx.num_vertices();
  constexpr std::size_t kNever = static_cast<std::size_t>(-1);
  std::vector<std::vector<Weight>> rows(n);
  std::vector<std::size_t> row_version(n, kNever);
  std::size_t version = 0;
  DistanceSearch search(n);
  auto nbrs = [&h](Vertex v) { return h.neighbors(v); };

  auto cached_ok = [&](Vertex a, Vertex b, Weight bound) {
    return row_version[a] != kNever && rows[a][b] <= bound;
  };

  std::size_t bought_edges = 0;
  for (const auto& [u, v] : order) {
    const Weight bound = idx.dist(u, v) + allowance(u, v);
    if (cached_ok(u, v, bound) || cached_ok(v, u, bound)) continue;
    if (row_version[u] != version) {
      search.all_from(u, nbrs, rows[u]);
      row_version[u] = version;
      if (rows[u][v] <= bound) continue;
    }
    const auto path = canonical_path(idx, u, v);
    const auto added = h.add_path(path.vertices);
    if (added > 0) ++version;
    bought_edges += added;
    out.paths_added.push_back({u, v});
  }
  out.phases.push_back({"paths", bought_edges});
}

inline void finish(SpannerResult& r, const EdgeSubgraph& h) {
  r.edges = h.edge_ids();
}

inline std::size_t add_light_init(EdgeSubgraph& h, const LightInit& li) {
  std::size_t added = 0;
  for (auto id : li.kept_edges()) added += h.add(id) ? 1 : 0;
  return added;
}

}  // namespace detail

/// Greedy (2k-1)-spanner: scan edges by nondecreasing weight (ties by
/// endpoints) and keep an edge iff the spanner so far has no path within
/// (2k-1) times its weight.
inline SpannerResult greedy_multiplicative(const WeightedGraph& g, std::size_t k) {
  if (k == 0) throw Error("multiplicative spanner needs k >= 1");
  SpannerResult r;
  r.algo = "mult";
  const double stretch = 2.0 * static_cast<double>(k) - 1.0;
  r.params = {{"k", static_cast<double>(k)}, {"stretch", stretch}};

  std::vector<EdgeId> ids(g.num_edges());
  for (EdgeId i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    const auto& ea = g.edge(a);
    const auto& eb = g.edge(b);
    return std::tie(ea.w, ea.u, ea.v) < std::tie(eb.w, eb.u, eb.v);
  });

  EdgeSubgraph h(g);
  DistanceSearch search(g.num_vertices());
  auto nbrs = [&h](Vertex v) { return h.neighbors(v); };
  for (auto id : ids) {
    const auto& e = g.edge(id);
    if (search.to_target(e.u, e.v, stretch * e.w, nbrs) == kInfinity) h.add(id);
  }
  r.phases.push_back({"greedy", h.size()});
  detail::finish(r, h);
  return r;
}

/// +(6+eps)W spanner: ceil(n^(1/3))-light initialization, then path buying
/// over all pairs ordered by (W, d_G).
inline SpannerResult build_6eps_spanner(const ShortestPathIndex& idx, double eps) {
  if (!(eps > 0.0)) throw Error("eps must be positive");
  const auto& g = idx.graph();
  const std::size_t n = g.num_vertices();
  SpannerResult r;
  r.algo = "6w";
  const std::size_t t = ceil_pow(n, 1.0 / 3.0);
  r.params = {{"eps", eps}, {"t", static_cast<double>(t)}};

  EdgeSubgraph h(g);
  r.phases.push_back({"light_init", detail::add_light_init(h, t_light_init(g, t))});
  const auto order = make_pair_order(idx, connected_pairs(idx),
                                     PairOrderMode::kWeightThenDistance);
  const double c = 6.0 + eps;
  detail::buy_paths(idx, h, order,
                    [&](Vertex u, Vertex v) { return c * idx.max_weight(u, v); }, r);
  detail::finish(r, h);
  return r;
}

inline SpannerResult build_6eps_spanner(const WeightedGraph& g, double eps) {
  return build_6eps_spanner(build_index(g), eps);
}

/// +(2+eps)W subsetwise spanner for S x S: ceil(sqrt|S|)-light
/// initialization, then path buying over S x S ordered by W.
inline SpannerResult build_subsetwise_spanner(const ShortestPathIndex& idx,
                                              std::span<const Vertex> subset,
                                              double eps) {
  if (subset.empty()) throw Error("subset must be nonempty");
  if (!(eps > 0.0)) throw Error("eps must be positive");
  const auto& g = idx.graph();
  for (auto s : subset)
    if (s >= g.num_vertices()) throw Error("subset vertex out of range");
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  SpannerResult r;
  r.algo = "subsetwise";
  const std::size_t t = ceil_pow(s.size(), 0.5);
  r.params = {{"eps", eps}, {"t", static_cast<double>(t)},
              {"subset_size", static_cast<double>(s.size())}};

  EdgeSubgraph h(g);
  r.phases.push_back({"light_init", detail::add_light_init(h, t_light_init(g, t))});
  const auto order = make_pair_order(idx, connected_pairs(idx, s),
                                     PairOrderMode::kWeightOnly);
  const double c = 2.0 + eps;
  detail::buy_paths(idx, h, order,
                    [&](Vertex u, Vertex v) { return c * idx.max_weight(u, v); }, r);
  detail::finish(r, h);
  return r;
}

inline SpannerResult build_subsetwise_spanner(const WeightedGraph& g,
                                              std::span<const Vertex> subset,
                                              double eps) {
  return build_subsetwise_spanner(build_index(g), subset, eps);
}

/// k for the multiplicative part of the polynomial-stretch spanner: the
/// smallest k whose stretch 2k-1 is at least log2 n.
inline std::size_t poly_mult_k(std::size_t n) {
  const double l = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  return std::max<std::size_t>(1, ceil_snap((l + 1.0) / 2.0));
}

/// The additive factor c * n^((1-eps)/2) * log2 n applied to W_{u,v}.
inline double poly_stretch_factor(std::size_t n, double eps, double c) {
  const double nd = static_cast<double>(n);
  return c * std::pow(nd, (1.0 - eps) / 2.0) * (n > 1 ? std::log2(nd) : 0.0);
}

/// Linear-size polynomial-stretch spanner: ceil(n^eps)-light initialization,
/// a greedy multiplicative spanner of stretch >= log2 n, then path buying
/// ordered by W with allowance c * n^((1-eps)/2) * log2 n * W.
inline SpannerResult build_poly_spanner(const ShortestPathIndex& idx, double eps,
                                        double c = 16.0) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw Error("eps must lie in [0, 1]");
  if (!(c > 0.0)) throw Error("c must be positive");
  const auto& g = idx.graph();
  const std::size_t n = g.num_vertices();
  SpannerResult r;
  r.algo = "poly";
  const std::size_t t = ceil_pow(n, eps);
  const std::size_t k = poly_mult_k(n);
  const double factor = poly_stretch_factor(n, eps, c);
  r.params = {{"eps", eps}, {"c", c}, {"t", static_cast<double>(t)},
              {"k", static_cast<double>(k)}, {"factor", factor}};

  EdgeSubgraph h(g);
  r.phases.push_back({"light_init", detail::add_light_init(h, t_light_init(g, t))});
  std::size_t mult_new = 0;
  for (auto id : greedy_multiplicative(g, k).edges) mult_new += h.add(id) ? 1 : 0;
  r.phases.push_back({"multiplicative", mult_new});

  const auto order = make_pair_order(idx, connected_pairs(idx), PairOrderMode::kWeightOnly);
  detail::buy_paths(idx, h, order,
                    [&](Vertex u, Vertex v) { return factor * idx.max_weight(u, v); }, r);
  detail::finish(r, h);
  return r;
}

inline SpannerResult build_poly_spanner(const WeightedGraph& g, double eps,
                                        double c = 16.0) {
  return build_poly_spanner(build_index(g), eps, c);
}

}  // namespace wspan
