#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/rng.hpp"
#include "wspan/shortest_paths.hpp"
#include "wspan/spanner.hpp"

namespace wspan {

/// Degree levels, samples, pivots and bunches for the randomized +2W
/// spanner. Level vectors are indexed by level number; index 0 is the empty
/// level (s_0 = n, so no vertex reaches it) and E has an extra slot for
/// E_{k+1}.
struct LevelStructure {
  std::size_t k = 0;
  double c = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> s;                      // s_i = n / 2^i, i = 0..k
  std::vector<std::vector<bool>> in_v;        // V_i membership, i = 0..k
  std::vector<std::vector<Vertex>> d;         // D_i, i = 0..k
  std::vector<std::vector<Vertex>> pivot;     // p_i(v) or kNoVertex
  std::vector<std::vector<EdgeId>> estar;     // E*_i
  std::vector<std::vector<bool>> e;           // E_i membership, i = 1..k+1

  std::size_t v_size(std::size_t i) const {
    std::size_t c = 0;
    for (bool b : in_v[i]) c += b;
    return c;
  }
  std::size_t e_size(std::size_t i) const {
    std::size_t c = 0;
    for (bool b : e[i]) c += b;
    return c;
  }
};

/// Number of levels: ceil(log2(n) / 2).
inline std::size_t fast2w_levels(std::size_t n) {
  if (n < 2) return 0;
  return ceil_snap(std::log2(static_cast<double>(n)) / 2.0);
}

/// Bunch_i(v) as edge ids: all incident edges when v is below the level's
/// degree threshold or has no sampled neighbor, otherwise those strictly
/// lighter than the edge to its pivot.
inline std::vector<EdgeId> bunch(const WeightedGraph& g, const LevelStructure& ls,
                                 std::size_t i, Vertex v) {
  std::vector<EdgeId> out;
  const Vertex p = ls.pivot[i][v];
  const bool full = !ls.in_v[i][v] || p == kNoVertex;
  const Weight cut = full ? kInfinity : *g.weight(v, p);
  for (const auto& a : g.neighbors(v))
    if (full || a.w < cut) out.push_back(a.id);
  return out;
}

inline LevelStructure sample_levels(const WeightedGraph& g, double c,
                                    std::uint64_t seed) {
  if (!(c >= 1.0)) throw Error("sampling constant c must be >= 1");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  LevelStructure ls;
  ls.k = fast2w_levels(n);
  ls.c = c;
  ls.seed = seed;
  const std::size_t k = ls.k;
  const double logn = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;

  ls.s.resize(k + 1);
  ls.in_v.assign(k + 1, std::vector<bool>(n, false));
  ls.d.assign(k + 1, {});
  ls.pivot.assign(k + 1, std::vector<Vertex>(n, kNoVertex));
  ls.estar.assign(k + 1, {});
  ls.e.assign(k + 2, std::vector<bool>(m, false));
  ls.e[1].assign(m, true);

  for (std::size_t i = 0; i <= k; ++i) {
    ls.s[i] = static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(i));
    if (i == 0) continue;
    for (Vertex v = 0; v < n; ++v)
      ls.in_v[i][v] = static_cast<double>(g.degree(v)) >= ls.s[i];

    const double p = std::min(1.0, c * logn / ls.s[i]);
    const CounterRng rng(seed, streams::kLevelSample + i);
    std::vector<bool> sampled(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (rng.bernoulli(v, p)) {
        sampled[v] = true;
        ls.d[i].push_back(v);
      }
    }

    for (Vertex v = 0; v < n; ++v) {
      if (!ls.in_v[i][v]) continue;
      const Arc* best = nullptr;
      for (const auto& a : g.neighbors(v)) {
        if (!sampled[a.to]) continue;
        // Adjacency is sorted by id, so strict < keeps the smallest id on ties.
        if (best == nullptr || a.w < best->w) best = &a;
      }
      if (best != nullptr) {
        ls.pivot[i][v] = best->to;
        ls.estar[i].push_back(best->id);
      }
    }

    auto& next = ls.e[i + 1];
    for (Vertex v = 0; v < n; ++v)
      for (auto id : bunch(g, ls, i, v)) next[id] = true;
  }
  return ls;
}

/// Randomized +2W spanner: for each level i, canonical shortest-path trees
/// from every sampled root in (V, E_i + E*_i), plus all of E_{k+1}.
inline SpannerResult build_fast_2w(const WeightedGraph& g, const LevelStructure& ls) {
  const std::size_t n = g.num_vertices();
  SpannerResult r;
  r.algo = "fast2w";
  r.params = {{"c", ls.c}, {"seed", static_cast<double>(ls.seed)},
              {"k", static_cast<double>(ls.k)}};
  EdgeSubgraph h(g);

  std::vector<std::vector<Arc>> level_adj(n);
  for (std::size_t i = 1; i <= ls.k; ++i) {
    std::vector<bool> use = ls.e[i];
    for (auto id : ls.estar[i]) use[id] = true;
    for (Vertex v = 0; v < n; ++v) {
      level_adj[v].clear();
      for (const auto& a : g.neighbors(v))
        if (use[a.id]) level_adj[v].push_back(a);
    }
    std::size_t added = 0;
    for (Vertex root : ls.d[i]) {
      auto tree = canonical_dijkstra(n, root, [&](Vertex v) {
        return std::span<const Arc>(level_adj[v]);
      });
      for (Vertex v : tree.order) {
        if (v == root) continue;
        added += h.add(*g.find_edge(v, tree.parent[v])) ? 1 : 0;
      }
    }
    r.phases.push_back({"level_" + std::to_string(i), added});
    r.levels.push_back({i, ls.v_size(i), ls.d[i].size(), ls.e_size(i)});
  }

  std::size_t dumped = 0;
  const auto& last = ls.e[ls.k + 1];
  for (EdgeId id = 0; id < last.size(); ++id)
    if (last[id]) dumped += h.add(id) ? 1 : 0;
  r.phases.push_back({"final_dump", dumped});
  r.levels.push_back({ls.k + 1, n, 0, ls.e_size(ls.k + 1)});
  r.edges = h.edge_ids();
  return r;
}

inline SpannerResult build_fast_2w(const WeightedGraph& g, double c, std::uint64_t seed) {
  return build_fast_2w(g, sample_levels(g, c, seed));
}

}  // namespace wspan
