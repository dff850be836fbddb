// wspan: generate graphs, build spanners and emulators, verify stretch, and
// run benchmark sweeps.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, parse or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wspan/wspan.hpp"

namespace {

using nlohmann::json;
using namespace wspan;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFormats = R"(
Edge-list format:
  n m              header: vertex count, edge count
  u v w            m lines: 0-based endpoints, positive decimal weight
  u v w g|v        emulator output adds a tag: g = input edge, v = virtual
                   edge weighted by the graph distance

Subset files: whitespace-separated vertex ids.

build JSON: {algo, params, n, m_in, m_out, paths_bought, phase_edge_counts
             [, levels: [{level, V, D, E}]] [, sample_size, virtual_edges]}
verify JSON: {bound_kind, factor, pairs_checked, violation_count, violations:
             [{u, v, d_g, d_h, W, slack, kind}], max_slack_ratio, size, pass}
bench JSON lines: {algo, params, family, n, m_in, m_out, paths_bought,
             wall_time_ms, graph_seed, seed, deterministic, verify_pass,
             max_slack_ratio}

The default seed comes from WSPAN_SEED when set, otherwise 1.
Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
)";

std::uint64_t default_seed() {
  if (const char* s = std::getenv("WSPAN_SEED")) return std::stoull(s);
  return 1;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if constexpr (std::is_floating_point_v<T>) {
      out.push_back(static_cast<T>(std::stod(item)));
    } else {
      out.push_back(static_cast<T>(std::stoull(item)));
    }
  }
  return out;
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  auto f = open_output(path);
  f << j.dump(2) << '\n';
}

std::vector<Vertex> load_subset(const std::string& path) {
  auto f = open_input(path);
  return read_vertex_set(f, path);
}

// generate ---------------------------------------------------------------

struct GenerateOpts {
  std::string family = "gnp";
  std::string wmodel = "unit";
  GenSpec spec;
  std::string out;
};

int run_generate(GenerateOpts& o) {
  o.spec.family = parse_family(o.family);
  o.spec.weights = parse_weight_model(o.wmodel);
  const auto g = generate(o.spec);
  if (o.out.empty() || o.out == "-") {
    write_graph(std::cout, g);
  } else {
    write_graph(o.out, g);
  }
  return kExitPass;
}

// build ------------------------------------------------------------------

struct BuildOpts {
  std::string graph;
  std::string algo;
  std::optional<double> eps;
  std::size_t k = 2;
  std::optional<double> c;
  std::string subset;
  std::uint64_t seed = 1;
  std::string out;
  std::string stats;
};

int run_build(const BuildOpts& o) {
  const auto g = read_graph(o.graph);
  json stats;
  if (o.algo == "emulator4w") {
    const auto emu = build_4w_emulator(g, o.seed);
    if (!o.out.empty()) {
      auto f = open_output(o.out);
      write_emulator(f, emu);
    }
    stats = to_json(emu, g);
  } else {
    SpannerResult r;
    if (o.algo == "mult") {
      r = greedy_multiplicative(g, o.k);
    } else if (o.algo == "fast2w") {
      r = build_fast_2w(g, o.c.value_or(4.0), o.seed);
    } else {
      const auto idx = build_index(g);
      if (o.algo == "6w") {
        r = build_6eps_spanner(idx, o.eps.value_or(1.0));
      } else if (o.algo == "subsetwise") {
        if (o.subset.empty()) throw Error("subsetwise needs --subset FILE");
        r = build_subsetwise_spanner(idx, load_subset(o.subset), o.eps.value_or(1.0));
      } else if (o.algo == "poly") {
        r = build_poly_spanner(idx, o.eps.value_or(0.0), o.c.value_or(16.0));
      } else {
        throw Error("unknown algorithm: " + o.algo);
      }
    }
    if (!o.out.empty()) write_graph(o.out, to_graph(g, r));
    stats = to_json(r, g);
  }
  emit_json(stats, o.stats);
  return kExitPass;
}

// verify -----------------------------------------------------------------

struct VerifyOpts {
  std::string graph;
  std::string spanner;
  std::string bound;
};

int run_verify(const VerifyOpts& o) {
  const auto g = read_graph(o.graph);
  const std::size_t n = g.num_vertices();
  std::vector<std::string> parts;
  {
    std::stringstream ss(o.bound);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
  }
  if (parts.empty()) throw Error("empty --bound");
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) -> double {
    if (i >= parts.size()) throw Error("--bound " + o.bound + ": missing parameter");
    return std::stod(parts[i]);
  };

  const bool emulator = kind == "4w-emu";
  std::ifstream sf = open_input(o.spanner);
  const auto h = read_edge_list(sf, o.spanner, emulator).graph;
  const auto idx = build_index(g);

  json out;
  bool pass = true;
  auto additive = [&](double c, PairClass pc) {
    auto rep = verify_additive_W(idx, h, [c](std::size_t) { return c; }, pc);
    pass = pass && rep.passed();
    return to_json(rep);
  };
  if (!emulator) {
    const bool sub = verify_subgraph(g, h);
    out["subgraph"] = sub;
    pass = pass && sub;
  }
  if (kind == "6w") {
    out["stretch"] = additive(6.0 + arg(1), PairClass::all());
  } else if (kind == "2w") {
    out["stretch"] = additive(2.0, PairClass::all());
  } else if (kind == "4w-emu") {
    auto nc = verify_non_contracting(g, h);
    pass = pass && nc.passed();
    out["non_contracting"] = to_json(nc);
    out["stretch"] = additive(4.0, PairClass::all());
  } else if (kind == "poly") {
    out["stretch"] = additive(poly_stretch_factor(n, arg(1), arg(2)), PairClass::all());
  } else if (kind == "mult") {
    auto rep = verify_multiplicative(idx, h, arg(1));
    pass = pass && rep.passed();
    out["stretch"] = to_json(rep);
  } else if (kind == "subset") {
    if (parts.size() < 3) throw Error("--bound subset:EPS:SFILE");
    // Rejoin in case the path itself contains ':'.
    std::string path = parts[2];
    for (std::size_t i = 3; i < parts.size(); ++i) path += ":" + parts[i];
    out["stretch"] = additive(2.0 + arg(1), PairClass::within(load_subset(path)));
  } else {
    throw Error("unknown bound kind: " + kind);
  }
  out["pass"] = pass;
  std::cout << out.dump(2) << '\n';
  return pass ? kExitPass : kExitViolation;
}

// bench ------------------------------------------------------------------

struct BenchOpts {
  std::string family = "gnp";
  std::string sizes = "64,128,256";
  std::string graph_seeds = "1";
  double p = 0.1;
  std::optional<double> avg_degree_exp;
  double radius = 0.2;
  std::string wmodel = "uniform";
  double wmax = 0.0;
  bool lcc = false;
  std::string algos;
  std::string seeds;
  unsigned jobs = 1;
  std::string out;
};

int run_bench_cmd(const BenchOpts& o) {
  CorpusSpec corpus;
  corpus.family = parse_family(o.family);
  corpus.sizes = parse_list<std::size_t>(o.sizes);
  corpus.graph_seeds = parse_list<std::uint64_t>(o.graph_seeds);
  corpus.p = o.p;
  corpus.avg_degree_exp = o.avg_degree_exp;
  corpus.radius = o.radius;
  corpus.weights = parse_weight_model(o.wmodel);
  corpus.wmax = o.wmax;
  corpus.largest_component = o.lcc;

  std::vector<AlgoSpec> algos;
  {
    std::stringstream ss(o.algos);
    std::string a;
    while (std::getline(ss, a, ',')) {
      if (!a.empty()) algos.push_back(parse_algo(a));
    }
  }
  auto seeds = parse_list<std::uint64_t>(o.seeds);
  if (seeds.empty()) seeds.push_back(default_seed());

  const auto records = run_bench(corpus, algos, seeds, o.jobs);
  if (o.out.empty() || o.out == "-") {
    write_records(std::cout, records);
  } else {
    auto f = open_output(o.out);
    write_records(f, records);
    if (!f) throw Error("write failed: " + o.out);
  }
  return deterministic_failure(records) ? kExitViolation : kExitPass;
}

// stats ------------------------------------------------------------------

struct StatsOpts {
  std::string graph;
  std::string bench;
};

json graph_stats(const WeightedGraph& g) {
  const auto comp = connected_components(g);
  std::size_t components = 0;
  for (auto c : comp) components = std::max<std::size_t>(components, c + 1);
  std::size_t min_deg = g.num_vertices() ? g.degree(0) : 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) min_deg = std::min(min_deg, g.degree(v));
  const double n = static_cast<double>(g.num_vertices());
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"components", components},
          {"min_degree", min_deg},
          {"max_degree", g.max_degree()},
          {"avg_degree", n > 0 ? 2.0 * static_cast<double>(g.num_edges()) / n : 0.0},
          {"min_weight", g.num_edges() ? json(g.min_weight()) : json(nullptr)},
          {"max_weight", g.num_edges() ? json(g.max_weight()) : json(nullptr)}};
}

json bench_stats(const std::string& path) {
  auto f = open_input(path);
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(path, lineno, e.what());
    }
    BenchRecord r;
    r.algo = j.at("algo").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m_out = j.at("m_out").get<std::size_t>();
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    r.verify_pass = j.at("verify_pass").get<bool>();
    records.push_back(std::move(r));
  }
  std::map<std::string, json> per_algo;
  for (const auto& r : records) per_algo[r.algo];
  json out = json::object();
  for (auto& [algo, j] : per_algo) {
    auto sizes = medians_by_size(records, algo, [](const BenchRecord& r) {
      return static_cast<double>(r.m_out);
    });
    auto times = medians_by_size(records, algo, [](const BenchRecord& r) {
      return std::max(r.wall_time_ms, 1e-3);
    });
    std::size_t runs = 0, passed = 0;
    for (const auto& r : records) {
      if (r.algo != algo) continue;
      ++runs;
      passed += r.verify_pass;
    }
    j = {{"runs", runs}, {"verify_pass", passed}};
    json med = json::array();
    for (std::size_t i = 0; i < sizes.size(); ++i)
      med.push_back({{"n", sizes[i].first}, {"m_out", sizes[i].second}, {"wall_time_ms", times[i].second}});
    j["medians"] = med;
    if (sizes.size() >= 3) {
      j["size_exponent"] = size_scaling_fit(sizes);
      j["time_exponent"] = size_scaling_fit(times);
    }
    out[algo] = j;
  }
  return out;
}

int run_stats(const StatsOpts& o) {
  if (o.graph.empty() == o.bench.empty()) throw Error("stats needs exactly one of --graph or --bench");
  if (!o.graph.empty()) {
    std::cout << graph_stats(read_graph(o.graph)).dump(2) << '\n';
  } else {
    std::cout << bench_stats(o.bench).dump(2) << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted additive spanners and emulators: build, verify, benchmark"};
  app.footer(kFormats);
  app.require_subcommand(1);

  GenerateOpts gen;
  gen.spec.seed = default_seed();
  auto* g = app.add_subcommand("generate", "Write a seeded synthetic graph");
  g->add_option("--family", gen.family, "gnp|grid|geometric|star|path|complete|tree")->capture_default_str();
  g->add_option("--n", gen.spec.n, "Vertex count")->required();
  g->add_option("--p", gen.spec.p, "gnp edge probability")->capture_default_str();
  g->add_option("--rows", gen.spec.rows, "Grid rows");
  g->add_option("--cols", gen.spec.cols, "Grid columns");
  g->add_option("--radius", gen.spec.radius, "Geometric connection radius")->capture_default_str();
  g->add_option("--branching", gen.spec.branching, "Tree branching (0 = random recursive tree)");
  g->add_option("--wmodel", gen.wmodel, "unit|uniform|exp-spread")->capture_default_str();
  g->add_option("--wmax", gen.spec.wmax, "Maximum weight (default 100 uniform, 1000 exp-spread)");
  g->add_option("--seed", gen.spec.seed, "Generator seed");
  g->add_flag("--lcc", gen.spec.largest_component, "Keep only the largest connected component");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  BuildOpts build;
  build.seed = default_seed();
  auto* b = app.add_subcommand("build", "Build a spanner or emulator");
  b->add_option("--graph", build.graph, "Input edge list")->required();
  b->add_option("--algo", build.algo, "mult|6w|subsetwise|poly|fast2w|emulator4w")->required();
  b->add_option("--eps", build.eps, "Stretch parameter (6w, subsetwise: 1; poly: 0)");
  b->add_option("--k", build.k, "Multiplicative spanner stretch 2k-1")->capture_default_str();
  b->add_option("--c", build.c, "poly: stretch constant (16); fast2w: sampling constant (4)");
  b->add_option("--subset", build.subset, "Vertex subset file for subsetwise");
  b->add_option("--seed", build.seed, "Seed for randomized constructions");
  b->add_option("-o,--out", build.out, "Output edge list");
  b->add_option("--stats", build.stats, "Stats JSON file (default stdout)");

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "Certify a stretch bound exactly");
  v->add_option("--graph", ver.graph, "Input edge list")->required();
  v->add_option("--spanner", ver.spanner, "Spanner or emulator edge list")->required();
  v->add_option("--bound", ver.bound,
                "6w:EPS | 2w | 4w-emu | poly:EPS:C | mult:ALPHA | subset:EPS:SFILE")
      ->required();

  BenchOpts bench;
  auto* be = app.add_subcommand("bench", "Run build+verify sweeps, JSON lines out");
  be->add_option("--family", bench.family)->capture_default_str();
  be->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")->capture_default_str();
  be->add_option("--graph-seeds", bench.graph_seeds, "Comma-separated generator seeds")->capture_default_str();
  be->add_option("--p", bench.p, "gnp edge probability")->capture_default_str();
  be->add_option("--avg-degree-exp", bench.avg_degree_exp, "gnp with average degree n^X");
  be->add_option("--radius", bench.radius)->capture_default_str();
  be->add_option("--wmodel", bench.wmodel)->capture_default_str();
  be->add_option("--wmax", bench.wmax);
  be->add_flag("--lcc", bench.lcc);
  be->add_option("--algos", bench.algos, "Comma-separated, e.g. 6w:1,poly:0:16,fast2w:4,emulator4w");
  be->add_option("--seeds", bench.seeds, "Comma-separated construction seeds");
  be->add_option("--jobs", bench.jobs, "Parallel instances")->capture_default_str();
  be->add_option("-o,--out", bench.out, "Output JSON-lines file (default stdout)");

  StatsOpts st;
  auto* s = app.add_subcommand("stats", "Summarize a graph or a bench file");
  s->add_option("--graph", st.graph, "Edge list");
  s->add_option("--bench", st.bench, "Bench JSON-lines file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return run_generate(gen);
    if (*b) return run_build(build);
    if (*v) return run_verify(ver);
    if (*be) return run_bench_cmd(bench);
    if (*s) return run_stats(st);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
