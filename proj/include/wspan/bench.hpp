#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "wspan/emulator.hpp"
#include "wspan/fast_2w.hpp"
#include "wspan/generators.hpp"
#include "wspan/greedy.hpp"
#include "wspan/io.hpp"
#include "wspan/verify.hpp"

namespace wspan {

/// A construction with its parameters, parsed from strings such as
/// "6w:1", "subsetwise:0.5", "poly:0:16", "mult:2", "fast2w:4", "emulator4w".
struct AlgoSpec {
  std::string name;
  double eps = 1.0;
  double c = 16.0;
  std::size_t k = 2;

  bool randomized() const { return name == "fast2w" || name == "emulator4w"; }
};

inline AlgoSpec parse_algo(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  AlgoSpec a;
  a.name = parts[0];
  auto num = [&](std::size_t i) {
    try {
      return std::stod(parts.at(i));
    } catch (const std::exception&) {
      throw Error("bad parameter in algorithm '" + text + "'");
    }
  };
  if (a.name == "6w" || a.name == "subsetwise") {
    if (parts.size() > 2) throw Error("too many parameters: " + text);
    if (parts.size() > 1) a.eps = num(1);
  } else if (a.name == "poly") {
    a.eps = 0.0;
    if (parts.size() > 3) throw Error("too many parameters: " + text);
    if (parts.size() > 1) a.eps = num(1);
    if (parts.size() > 2) a.c = num(2);
  } else if (a.name == "mult") {
    if (parts.size() > 2) throw Error("too many parameters: " + text);
    if (parts.size() > 1) a.k = static_cast<std::size_t>(num(1));
  } else if (a.name == "fast2w") {
    a.c = 4.0;
    if (parts.size() > 2) throw Error("too many parameters: " + text);
    if (parts.size() > 1) a.c = num(1);
  } else if (a.name == "emulator4w") {
    if (parts.size() > 1) throw Error("emulator4w takes no parameters");
  } else {
    throw Error("unknown algorithm: " + a.name);
  }
  return a;
}

/// A family of generated instances: every size crossed with every graph seed.
struct CorpusSpec {
  Family family = Family::kGnp;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> graph_seeds{1};
  double p = 0.1;
  /// When set, gnp uses p = n^avg_degree_exp / (n - 1).
  std::optional<double> avg_degree_exp;
  double radius = 0.2;
  WeightModel weights = WeightModel::kUniform;
  double wmax = 0.0;
  bool largest_component = false;
};

inline GenSpec instance_spec(const CorpusSpec& c, std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.family = c.family;
  s.n = n;
  s.p = c.p;
  if (c.avg_degree_exp && n > 1)
    s.p = std::min(1.0, std::pow(static_cast<double>(n), *c.avg_degree_exp) /
                            static_cast<double>(n - 1));
  s.radius = c.radius;
  s.weights = c.weights;
  s.wmax = c.wmax;
  s.seed = seed;
  s.largest_component = c.largest_component;
  return s;
}

struct BenchRecord {
  std::string algo;
  nlohmann::json params;
  std::string family;
  std::size_t n = 0;
  std::size_t m_in = 0;
  std::size_t m_out = 0;
  std::size_t paths_bought = 0;
  double wall_time_ms = 0.0;
  std::uint64_t graph_seed = 0;
  std::optional<std::uint64_t> seed;  // construction seed, randomized algorithms only
  bool deterministic = true;
  bool verify_pass = false;
  double max_slack_ratio = 0.0;
};

inline nlohmann::json to_json(const BenchRecord& r) {
  return {{"algo", r.algo},
          {"params", r.params},
          {"family", r.family},
          {"n", r.n},
          {"m_in", r.m_in},
          {"m_out", r.m_out},
          {"paths_bought", r.paths_bought},
          {"wall_time_ms", r.wall_time_ms},
          {"graph_seed", r.graph_seed},
          {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
          {"deterministic", r.deterministic},
          {"verify_pass", r.verify_pass},
          {"max_slack_ratio", json_number(r.max_slack_ratio)}};
}

/// Outcome of one construction plus its verification.
struct RunOutcome {
  BenchRecord record;
  StretchReport report;
  std::optional<StretchReport> non_contracting;  // emulator only
  std::optional<SpannerResult> spanner;
  std::optional<EmulatorResult> emulator;
  std::vector<Vertex> subset;  // subsetwise only
};

/// Builds `algo` on the indexed graph, times the build, and verifies the
/// construction's own claimed bound. `seed` drives the randomized
/// constructions and the random subset for subsetwise.
inline RunOutcome run_algo(const AlgoSpec& algo, const ShortestPathIndex& idx,
                           std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  const auto& g = idx.graph();
  const std::size_t n = g.num_vertices();
  RunOutcome out;
  auto& rec = out.record;
  rec.algo = algo.name;
  rec.n = n;
  rec.m_in = g.num_edges();
  rec.deterministic = !algo.randomized();
  if (algo.randomized()) rec.seed = seed;

  const auto t0 = Clock::now();
  if (algo.name == "emulator4w") {
    out.emulator = build_4w_emulator(g, seed);
  } else if (algo.name == "fast2w") {
    out.spanner = build_fast_2w(g, algo.c, seed);
  } else if (algo.name == "6w") {
    out.spanner = build_6eps_spanner(idx, algo.eps);
  } else if (algo.name == "subsetwise") {
    out.subset = random_subset(n, ceil_pow(n, 0.5), seed);
    out.spanner = build_subsetwise_spanner(idx, out.subset, algo.eps);
  } else if (algo.name == "poly") {
    out.spanner = build_poly_spanner(idx, algo.eps, algo.c);
  } else if (algo.name == "mult") {
    out.spanner = greedy_multiplicative(g, algo.k);
  } else {
    throw Error("unknown algorithm: " + algo.name);
  }
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  if (out.emulator) {
    const auto h = out.emulator->to_graph();
    rec.m_out = h.num_edges();
    rec.params = {{"seed", seed}, {"t", out.emulator->t}};
    out.non_contracting = verify_non_contracting(g, h);
    out.report = verify_additive_W(idx, h, [](std::size_t) { return 4.0; });
    rec.verify_pass = out.non_contracting->passed() && out.report.passed();
  } else {
    const auto& sp = *out.spanner;
    const auto h = to_graph(g, sp);
    rec.m_out = h.num_edges();
    rec.paths_bought = sp.paths_added.size();
    for (const auto& [k, v] : sp.params) rec.params[k] = v;
    if (algo.name == "mult") {
      out.report = verify_multiplicative(idx, h, 2.0 * static_cast<double>(algo.k) - 1.0);
    } else {
      double c = 0.0;
      PairClass pc = PairClass::all();
      if (algo.name == "6w") c = 6.0 + algo.eps;
      if (algo.name == "fast2w") c = 2.0;
      if (algo.name == "subsetwise") {
        c = 2.0 + algo.eps;
        pc = PairClass::within(out.subset);
      }
      if (algo.name == "poly") c = poly_stretch_factor(n, algo.eps, algo.c);
      out.report = verify_additive_W(idx, h, [c](std::size_t) { return c; }, pc);
    }
    rec.verify_pass = verify_subgraph(g, h) && out.report.passed();
  }
  rec.max_slack_ratio = out.report.max_slack_ratio;
  return out;
}

/// Runs every (instance, algorithm, seed) combination and returns records in
/// a fixed order: by size, graph seed, algorithm, then construction seed.
/// Deterministic algorithms run once per instance. Instances are processed
/// on up to `jobs` threads.
inline std::vector<BenchRecord> run_bench(const CorpusSpec& corpus,
                                          const std::vector<AlgoSpec>& algos,
                                          const std::vector<std::uint64_t>& seeds,
                                          unsigned jobs = 1) {
  struct Instance { std::size_t n; std::uint64_t graph_seed; };
  std::vector<Instance> instances;
  for (auto n : corpus.sizes)
    for (auto gs : corpus.graph_seeds) instances.push_back({n, gs});

  std::vector<std::vector<BenchRecord>> slots(instances.size());
  if (algos.empty()) return {};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      const auto& inst = instances[i];
      const auto g = generate(instance_spec(corpus, inst.n, inst.graph_seed));
      const auto idx = build_index(g);
      for (const auto& a : algos) {
        const bool rand = a.randomized() || a.name == "subsetwise";
        const std::vector<std::uint64_t> run_seeds =
            rand ? seeds : std::vector<std::uint64_t>{inst.graph_seed};
        for (auto s : run_seeds) {
          auto rec = run_algo(a, idx, s).record;
          rec.family = to_string(corpus.family);
          rec.graph_seed = inst.graph_seed;
          if (a.name == "subsetwise") rec.seed = s;
          slots[i].push_back(std::move(rec));
        }
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  std::vector<BenchRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

inline void write_records(std::ostream& out, const std::vector<BenchRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

inline bool deterministic_failure(const std::vector<BenchRecord>& records) {
  return std::any_of(records.begin(), records.end(),
                     [](const BenchRecord& r) { return r.deterministic && !r.verify_pass; });
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) throw Error("median of empty set");
  std::sort(xs.begin(), xs.end());
  const auto mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

/// Per-size medians of `field(record)` for one algorithm, as (n, value).
template <typename Field>
std::vector<std::pair<double, double>> medians_by_size(const std::vector<BenchRecord>& records,
                                                       const std::string& algo, Field&& field) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const auto& r : records)
    if (r.algo == algo) by_n[r.n].push_back(field(r));
  std::vector<std::pair<double, double>> out;
  for (auto& [n, xs] : by_n) out.emplace_back(static_cast<double>(n), median(xs));
  return out;
}

}  // namespace wspan
