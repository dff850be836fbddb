#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/light_init.hpp"
#include "wspan/rng.hpp"
#include "wspan/shortest_paths.hpp"
#include "wspan/spanner.hpp"

namespace wspan {

struct EmulatorEdge {
  Vertex u;  // u < v
  Vertex v;
  Weight w;
  bool is_virtual;  // weight is d_G(u,v) rather than an input edge weight
};

struct EmulatorResult {
  std::size_t n = 0;
  std::vector<EmulatorEdge> edges;  // sorted by (u, v)
  double sample_probability = 0.0;
  std::uint64_t seed = 0;
  std::size_t t = 0;
  std::vector<Vertex> sampled;  // S, ascending

  std::size_t virtual_count() const {
    return static_cast<std::size_t>(std::count_if(
        edges.begin(), edges.end(), [](const EmulatorEdge& e) { return e.is_virtual; }));
  }

  WeightedGraph to_graph() const {
    WeightedGraph h(n);
    for (const auto& e : edges) h.add_edge(e.u, e.v, e.w);
    return h;
  }
};

/// Light-initialization degree for the +4W emulator: ceil(2 n^(1/3) ln n).
inline std::size_t emulator_light_degree(std::size_t n) {
  const double nd = static_cast<double>(n);
  return ceil_snap(2.0 * std::cbrt(nd) * std::log(nd));
}

/// +4W emulator: light initialization with original weights, plus a clique on
/// a vertex sample S (each vertex kept with probability n^(-1/3)) weighted by
/// exact graph distances.
inline EmulatorResult build_4w_emulator(const WeightedGraph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error("emulator needs at least 2 vertices");
  EmulatorResult r;
  r.n = n;
  r.seed = seed;
  r.t = emulator_light_degree(n);
  r.sample_probability = 1.0 / std::cbrt(static_cast<double>(n));

  std::map<std::pair<Vertex, Vertex>, EmulatorEdge> chosen;
  const LightInit li(g, r.t);
  for (auto id : li.kept_edges()) {
    const auto& e = g.edge(id);
    chosen[{e.u, e.v}] = {e.u, e.v, e.w, false};
  }

  const CounterRng rng(seed, streams::kEmulatorSample);
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(v, r.sample_probability)) r.sampled.push_back(v);

  for (std::size_t i = 0; i < r.sampled.size(); ++i) {
    const Vertex a = r.sampled[i];
    const auto sp = sssp_canonical(g, a);
    for (std::size_t j = i + 1; j < r.sampled.size(); ++j) {
      const Vertex b = r.sampled[j];
      const Weight d = sp.dist[b];
      if (d == kInfinity) continue;
      auto [it, fresh] = chosen.try_emplace({a, b}, EmulatorEdge{a, b, d, true});
      if (!fresh && d < it->second.w) it->second = {a, b, d, true};
    }
  }

  r.edges.reserve(chosen.size());
  for (const auto& [key, e] : chosen) r.edges.push_back(e);
  return r;
}

}  // namespace wspan
