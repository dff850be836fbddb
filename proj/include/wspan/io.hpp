#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wspan/emulator.hpp"
#include "wspan/graph.hpp"
#include "wspan/spanner.hpp"
#include "wspan/verify.hpp"

namespace wspan {

// Edge-list text format:
//
//   n m
//   u v w        (m lines, 0-based ids, decimal weight)
//
// Emulator files may carry a fourth column `g` (input edge) or `v` (virtual
// edge weighted by a graph distance). Blank lines and lines starting with '#'
// are ignored.

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Shortest decimal text that reads back to the same double.
inline std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

struct TaggedEdgeList {
  WeightedGraph graph;
  std::vector<bool> is_virtual;  // per edge id; all false for plain files
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, const std::string& src, std::size_t line,
               const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(src, line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline TaggedEdgeList read_edge_list(std::istream& in, const std::string& src,
                                     bool allow_tags) {
  std::string text;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t expected = 0;
  TaggedEdgeList out;
  while (std::getline(in, text)) {
    ++lineno;
    auto toks = detail::split_ws(text);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(src, lineno, "expected header 'n m'");
      auto n = detail::parse_number<std::size_t>(toks[0], src, lineno, "vertex count");
      expected = detail::parse_number<std::size_t>(toks[1], src, lineno, "edge count");
      out.graph = WeightedGraph(n);
      have_header = true;
      continue;
    }
    const bool tagged = toks.size() == 4 && allow_tags;
    if (toks.size() != 3 && !tagged)
      throw ParseError(src, lineno, allow_tags ? "expected 'u v w [g|v]'" : "expected 'u v w'");
    auto u = detail::parse_number<Vertex>(toks[0], src, lineno, "vertex id");
    auto v = detail::parse_number<Vertex>(toks[1], src, lineno, "vertex id");
    auto w = detail::parse_number<double>(toks[2], src, lineno, "weight");
    bool virt = false;
    if (tagged) {
      if (toks[3] != "g" && toks[3] != "v") throw ParseError(src, lineno, "edge tag must be g or v");
      virt = toks[3] == "v";
    }
    if (out.graph.num_edges() == expected) throw ParseError(src, lineno, "more edges than declared");
    try {
      out.graph.add_edge(u, v, w);
    } catch (const Error& e) {
      throw ParseError(src, lineno, e.what());
    }
    out.is_virtual.push_back(virt);
  }
  if (!have_header) throw ParseError(src, lineno, "missing header");
  if (out.graph.num_edges() != expected)
    throw ParseError(src, lineno, "declared " + std::to_string(expected) + " edges, found " +
                                      std::to_string(out.graph.num_edges()));
  return out;
}

inline WeightedGraph read_graph(std::istream& in, const std::string& src = "<input>") {
  return read_edge_list(in, src, false).graph;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return f;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  return f;
}

inline WeightedGraph read_graph(const std::string& path) {
  auto f = open_input(path);
  return read_graph(f, path);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

inline void write_graph(const std::string& path, const WeightedGraph& g) {
  auto f = open_output(path);
  write_graph(f, g);
  if (!f) throw Error("write failed: " + path);
}

inline void write_emulator(std::ostream& out, const EmulatorResult& r) {
  out << r.n << ' ' << r.edges.size() << '\n';
  for (const auto& e : r.edges)
    out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << ' ' << (e.is_virtual ? 'v' : 'g')
        << '\n';
}

/// Whitespace-separated vertex ids; '#' starts a comment line.
inline std::vector<Vertex> read_vertex_set(std::istream& in, const std::string& src) {
  std::vector<Vertex> out;
  std::string text;
  std::size_t lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    auto toks = detail::split_ws(text);
    if (toks.empty() || toks[0].front() == '#') continue;
    for (auto t : toks) out.push_back(detail::parse_number<Vertex>(t, src, lineno, "vertex id"));
  }
  return out;
}

inline void write_vertex_set(std::ostream& out, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << s[i] << (i + 1 < s.size() ? ' ' : '\n');
}

// JSON records.

inline nlohmann::json to_json(const SpannerResult& r, const WeightedGraph& g) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json phases = nlohmann::json::object();
  for (const auto& p : r.phases) phases[p.phase] = p.new_edges;
  nlohmann::json j{{"algo", r.algo},
                   {"params", params},
                   {"n", g.num_vertices()},
                   {"m_in", g.num_edges()},
                   {"m_out", r.edges.size()},
                   {"paths_bought", r.paths_added.size()},
                   {"phase_edge_counts", phases}};
  if (!r.levels.empty()) {
    auto levels = nlohmann::json::array();
    for (const auto& l : r.levels)
      levels.push_back({{"level", l.level}, {"V", l.v_size}, {"D", l.d_size}, {"E", l.e_size}});
    j["levels"] = levels;
  }
  return j;
}

inline nlohmann::json to_json(const EmulatorResult& r, const WeightedGraph& g) {
  return {{"algo", "emulator4w"},
          {"params", {{"seed", r.seed}, {"t", r.t}, {"sample_probability", r.sample_probability}}},
          {"n", g.num_vertices()},
          {"m_in", g.num_edges()},
          {"m_out", r.edges.size()},
          {"sample_size", r.sampled.size()},
          {"virtual_edges", r.virtual_count()}};
}

inline nlohmann::json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline nlohmann::json to_json(const StretchReport& r, std::size_t max_violations = 50) {
  auto viol = nlohmann::json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < max_violations; ++i) {
    const auto& v = r.violations[i];
    viol.push_back({{"u", v.u},
                    {"v", v.v},
                    {"d_g", json_number(v.d_g)},
                    {"d_h", json_number(v.d_h)},
                    {"W", v.w_uv},
                    {"slack", json_number(v.slack)},
                    {"kind", to_string(v.kind)}});
  }
  nlohmann::json j{{"bound_kind", to_string(r.kind)},
                   {"factor", r.factor},
                   {"pairs_checked", r.pairs_checked},
                   {"violation_count", r.violations.size()},
                   {"violations", viol},
                   {"max_slack_ratio", json_number(r.max_slack_ratio)},
                   {"size", r.size},
                   {"pass", r.passed()}};
  if (r.minimax)
    j["minimax_check"] = {{"pairs_with_gap", r.minimax->pairs_with_gap},
                          {"max_gap", r.minimax->max_gap}};
  return j;
}

}  // namespace wspan
