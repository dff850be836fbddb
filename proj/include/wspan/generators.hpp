#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/rng.hpp"

namespace wspan {

enum class Family { kGnp, kGrid, kGeometric, kStar, kPath, kComplete, kTree };
enum class WeightModel { kUnit, kUniform, kExpSpread };

/// Description of a synthetic graph. The same spec always yields the same
/// graph: all randomness comes from CounterRng keyed by `seed`.
struct GenSpec {
  Family family = Family::kGnp;
  std::size_t n = 0;
  double p = 0.1;              // gnp edge probability
  std::size_t rows = 0;        // grid; 0 picks a near-square shape for n
  std::size_t cols = 0;
  double radius = 0.2;         // geometric connection radius
  std::size_t branching = 0;   // tree; 0 = random recursive tree
  WeightModel weights = WeightModel::kUnit;
  double wmax = 0.0;           // 0 = model default (100 uniform, 1000 exp-spread)
  std::uint64_t seed = 0;
  bool largest_component = false;
};

inline Family parse_family(std::string_view s) {
  if (s == "gnp") return Family::kGnp;
  if (s == "grid") return Family::kGrid;
  if (s == "geometric") return Family::kGeometric;
  if (s == "star") return Family::kStar;
  if (s == "path") return Family::kPath;
  if (s == "complete") return Family::kComplete;
  if (s == "tree") return Family::kTree;
  throw Error("unknown graph family: " + std::string(s));
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kGnp: return "gnp";
    case Family::kGrid: return "grid";
    case Family::kGeometric: return "geometric";
    case Family::kStar: return "star";
    case Family::kPath: return "path";
    case Family::kComplete: return "complete";
    case Family::kTree: return "tree";
  }
  return "?";
}

inline WeightModel parse_weight_model(std::string_view s) {
  if (s == "unit") return WeightModel::kUnit;
  if (s == "uniform") return WeightModel::kUniform;
  if (s == "exp-spread") return WeightModel::kExpSpread;
  throw Error("unknown weight model: " + std::string(s));
}

inline const char* to_string(WeightModel w) {
  switch (w) {
    case WeightModel::kUnit: return "unit";
    case WeightModel::kUniform: return "uniform";
    case WeightModel::kExpSpread: return "exp-spread";
  }
  return "?";
}

inline double default_wmax(WeightModel m) {
  switch (m) {
    case WeightModel::kUnit: return 1.0;
    case WeightModel::kUniform: return 100.0;
    case WeightModel::kExpSpread: return 1000.0;
  }
  return 1.0;
}

/// Generated weights are rounded to multiples of 2^-16. Path sums over such
/// weights are exact in double precision, so equal-length paths compare equal
/// regardless of summation order.
inline double snap_weight(double w) { return std::ldexp(std::round(std::ldexp(w, 16)), -16); }

namespace detail {

/// Weight for the idx-th generated edge.
inline double draw_weight(const GenSpec& spec, double wmax, std::uint64_t idx) {
  const CounterRng rng(spec.seed, streams::kEdgeWeight);
  const double u = rng.uniform(idx);
  double w = 1.0;
  switch (spec.weights) {
    case WeightModel::kUnit: return 1.0;
    case WeightModel::kUniform: w = 1.0 + (wmax - 1.0) * u; break;
    case WeightModel::kExpSpread: w = std::pow(wmax, u); break;
  }
  return std::clamp(snap_weight(w), 1.0, wmax);
}

struct EdgeSink {
  const GenSpec& spec;
  double wmax;
  WeightedGraph& g;
  std::uint64_t next = 0;

  void add(Vertex u, Vertex v) { g.add_edge(u, v, draw_weight(spec, wmax, next++)); }
};

inline void check_spec(const GenSpec& s) {
  if (s.n < 1) throw Error("generator needs n >= 1");
  if (!(s.p >= 0.0 && s.p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  if (s.family == Family::kGeometric && !(s.radius > 0.0)) throw Error("radius must be positive");
  if (s.family == Family::kGrid && (s.rows == 0) != (s.cols == 0))
    throw Error("grid needs both rows and cols, or neither");
  if (s.family == Family::kGrid && s.rows != 0 && s.rows * s.cols != s.n)
    throw Error("grid rows * cols must equal n");
  if (s.wmax != 0.0 && !(s.wmax >= 1.0)) throw Error("wmax must be >= 1");
}

}  // namespace detail

inline WeightedGraph generate(const GenSpec& spec) {
  detail::check_spec(spec);
  const std::size_t n = spec.n;
  const double wmax = spec.wmax != 0.0 ? spec.wmax : default_wmax(spec.weights);
  WeightedGraph g(n);
  detail::EdgeSink sink{spec, wmax, g};
  const auto nv = static_cast<Vertex>(n);

  switch (spec.family) {
    case Family::kGnp: {
      const CounterRng rng(spec.seed, streams::kEdgePresence);
      for (Vertex u = 0; u < nv; ++u)
        for (Vertex v = u + 1; v < nv; ++v)
          if (rng.uniform(static_cast<std::uint64_t>(u) * n + v) < spec.p) sink.add(u, v);
      break;
    }
    case Family::kGrid: {
      std::size_t rows = spec.rows, cols = spec.cols;
      if (rows == 0) {
        rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
        while (n % rows != 0) --rows;
        cols = n / rows;
      }
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const auto v = static_cast<Vertex>(r * cols + c);
          if (c + 1 < cols) sink.add(v, v + 1);
          if (r + 1 < rows) sink.add(v, static_cast<Vertex>(v + cols));
        }
      }
      break;
    }
    case Family::kGeometric: {
      // Euclidean weights rescaled so the shortest edge weighs 1; the weight
      // model is ignored except for `unit`.
      const CounterRng rng(spec.seed, streams::kPoints);
      std::vector<double> x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.uniform(2 * i);
        y[i] = rng.uniform(2 * i + 1);
      }
      struct Cand { Vertex u, v; double d; };
      std::vector<Cand> cands;
      double lo = kInfinity;
      for (Vertex u = 0; u < nv; ++u) {
        for (Vertex v = u + 1; v < nv; ++v) {
          const double d = std::hypot(x[u] - x[v], y[u] - y[v]);
          if (d <= spec.radius && d > 0.0) {
            cands.push_back({u, v, d});
            lo = std::min(lo, d);
          }
        }
      }
      for (const auto& c : cands) {
        const double w = spec.weights == WeightModel::kUnit ? 1.0 : std::max(1.0, snap_weight(c.d / lo));
        g.add_edge(c.u, c.v, w);
      }
      break;
    }
    case Family::kStar:
      for (Vertex v = 1; v < nv; ++v) sink.add(0, v);
      break;
    case Family::kPath:
      for (Vertex v = 1; v < nv; ++v) sink.add(v - 1, v);
      break;
    case Family::kComplete:
      for (Vertex u = 0; u < nv; ++u)
        for (Vertex v = u + 1; v < nv; ++v) sink.add(u, v);
      break;
    case Family::kTree: {
      const CounterRng rng(spec.seed, streams::kTreeParent);
      for (Vertex v = 1; v < nv; ++v) {
        Vertex parent = spec.branching > 0
                            ? static_cast<Vertex>((v - 1) / spec.branching)
                            : static_cast<Vertex>(rng.bits(v) % v);
        sink.add(parent, v);
      }
      break;
    }
  }
  if (spec.largest_component) return largest_component(g);
  return g;
}

/// `size` distinct vertices of 0..n-1 chosen by seeded hash rank, ascending.
inline std::vector<Vertex> random_subset(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (size > n) throw Error("subset larger than vertex set");
  const CounterRng rng(seed, streams::kSubsetSample);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::sort(all.begin(), all.end(), [&](Vertex a, Vertex b) {
    const auto ka = rng.bits(a), kb = rng.bits(b);
    return ka != kb ? ka < kb : a < b;
  });
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace wspan
