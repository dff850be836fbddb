// Builds each construction on one generated graph and prints size and
// worst observed slack.

#include <cstdio>

#include "wspan/wspan.hpp"

int main() {
  using namespace wspan;
  GenSpec spec;
  spec.family = Family::kGnp;
  spec.n = 120;
  spec.p = 0.15;
  spec.weights = WeightModel::kExpSpread;
  spec.seed = 42;
  const auto g = generate(spec);
  const auto idx = build_index(g);
  std::printf("input: n=%zu m=%zu\n", g.num_vertices(), g.num_edges());

  auto report = [&](const char* name, const WeightedGraph& h, double c) {
    const auto r = verify_additive_W(idx, h, [c](std::size_t) { return c; });
    std::printf("%-12s edges=%-6zu max (dH-dG)/W=%.3f  bound=%.3f  %s\n", name, h.num_edges(),
                r.max_slack_ratio, c, r.passed() ? "ok" : "VIOLATED");
  };

  report("+(6+1)W", to_graph(g, build_6eps_spanner(idx, 1.0)), 7.0);
  report("+2W fast", to_graph(g, build_fast_2w(g, 4.0, 7)), 2.0);
  report("poly eps=0", to_graph(g, build_poly_spanner(idx, 0.0)),
         poly_stretch_factor(g.num_vertices(), 0.0, 16.0));
  report("+4W emu", build_4w_emulator(g, 7).to_graph(), 4.0);
  return 0;
}
