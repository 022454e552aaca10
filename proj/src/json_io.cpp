#include "splitspecies/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "splitspecies/error.hpp"

namespace splitspecies {

namespace {

template <class Fn>
auto guarded(std::string_view what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, "malformed " + std::string(what) + ": " + e.what());
  }
}

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

void put_graph(Json& j, const Graph& g) {
  j["n"] = g.order();
  j["edges"] = edges_json(g);
  if (g.vertices() != VertexSet::range(g.order())) j["vertices"] = g.vertices().labels();
}

int label_from_json(const Json& j) {
  const int v = j.get<int>();
  if (v < 0 || v >= kMaxVertices) fail(ErrorCode::OutOfRange, "label " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

Json to_json(VertexSet set) { return Json(set.labels()); }

VertexSet vertex_set_from_json(const Json& j) {
  return guarded("vertex set", [&] {
    VertexSet out;
    for (const auto& v : j) {
      const int label = label_from_json(v);
      if (out.contains(label)) fail(ErrorCode::ParseError, "label " + std::to_string(label) + " repeated");
      out = out.with(label);
    }
    return out;
  });
}

Json to_json(const Graph& g) {
  Json j = Json::object();
  put_graph(j, g);
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
    if (n > kMaxVertices) fail(ErrorCode::TooLarge, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    const VertexSet vertices = j.contains("vertices") ? vertex_set_from_json(j.at("vertices")) : VertexSet::range(n);
    if (vertices.size() != n) fail(ErrorCode::LengthMismatch, "\"vertices\" does not have n entries");
    Graph g(vertices);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "an edge is a pair of labels");
      const int u = label_from_json(e[0]);
      const int v = label_from_json(e[1]);
      if (!vertices.contains(u) || !vertices.contains(v))
        fail(ErrorCode::OutOfRange, "edge endpoint is not a vertex");
      g.add_edge(u, v);
    }
    return g;
  });
}

Json to_json(const ColoredSplitGraph& c) {
  Json j = to_json(c.graph());
  j["green"] = to_json(c.green());
  j["red"] = to_json(c.red());
  return j;
}

ColoredSplitGraph colored_from_json(const Json& j) {
  return guarded("colored split graph", [&] {
    return ColoredSplitGraph::make(graph_from_json(j), vertex_set_from_json(j.at("green")),
                                   vertex_set_from_json(j.at("red")));
  });
}

Json to_json(const BicoloredGraph& b) {
  Json j = to_json(b.graph);
  j["green"] = to_json(b.green);
  j["red"] = to_json(b.red);
  return j;
}

BicoloredGraph bicolored_from_json(const Json& j) {
  return guarded("bicolored graph", [&] {
    BicoloredGraph b = make_bicolored(graph_from_json(j), vertex_set_from_json(j.at("green")));
    if (j.contains("red") && vertex_set_from_json(j.at("red")) != b.red)
      fail(ErrorCode::NotBicolored, "\"red\" must be the complement of \"green\"");
    return b;
  });
}

Json to_json(const Structure& s) {
  return std::visit([](const auto& value) { return to_json(value); }, s);
}

Json to_json(const SwingReport& r) {
  Json j = Json::object();
  j["swings"] = to_json(r.swings);
  j["kind"] = std::string(to_string(r.kind));
  j["joined"] = to_json(r.joined);
  j["separated"] = to_json(r.separated);
  return j;
}

Json to_json(const KCanonicalParts& parts) {
  Json j = Json::object();
  j["swings"] = to_json(parts.swings);
  j["rest"] = to_json(parts.rest);
  return j;
}

Json to_json(const AmbiguousParts& parts) {
  Json j = Json::object();
  j["swing"] = parts.swing;
  j["rest"] = to_json(parts.rest);
  return j;
}

Json to_json(const ColoredKCanonicalParts& parts) {
  Json j = Json::object();
  j["swings"] = {{"elements", to_json(parts.swings.elements())}, {"point", parts.swings.point()}};
  j["rest"] = to_json(parts.rest);
  return j;
}

KCanonicalParts k_canonical_parts_from_json(const Json& j) {
  return guarded("K-canonical parts", [&] {
    return KCanonicalParts{vertex_set_from_json(j.at("swings")), colored_from_json(j.at("rest"))};
  });
}

AmbiguousParts ambiguous_parts_from_json(const Json& j) {
  return guarded("ambiguous parts", [&] {
    return AmbiguousParts{label_from_json(j.at("swing")), graph_from_json(j.at("rest"))};
  });
}

ColoredKCanonicalParts colored_k_canonical_parts_from_json(const Json& j) {
  return guarded("colored K-canonical parts", [&] {
    const Json& swings = j.at("swings");
    return ColoredKCanonicalParts{
        PointedSet::make(vertex_set_from_json(swings.at("elements")), label_from_json(swings.at("point"))),
        colored_from_json(j.at("rest"))};
  });
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    std::istringstream fields(line);
    const auto where = "line " + std::to_string(line_number);
    if (n < 0) {
      std::string extra;
      if (!(fields >> n) || n < 0 || (fields >> extra)) fail(ErrorCode::ParseError, where + ": expected a vertex count");
      continue;
    }
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) fail(ErrorCode::ParseError, where + ": expected \"i j\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) fail(ErrorCode::ParseError, "missing vertex count");
  return make_graph(n, edges);
}

Json parse_structure_document(std::string_view text) {
  const auto start = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (start != text.end() && *start == '{') {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
  }
  return to_json(parse_graph_text(text));
}

Json series_to_json(const RationalSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

Json counts_to_json(const RationalSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.counts()) {
    if (c.get_den() != 1) fail(ErrorCode::NonIntegralResult, "count " + c.get_str() + " is not an integer");
    out.push_back(c.get_num().get_str());
  }
  return out;
}

Json to_json(const CountTable& table) {
  Json j = Json::object();
  j["class"] = table.kind();
  j["labeled"] = table.labeled();
  Json values = Json::array();
  for (const auto& [n, entry] : table.entries())
    values.push_back({{"n", n}, {"count", entry.value.get_str()}, {"provenance", std::string(to_string(entry.provenance))}});
  j["values"] = std::move(values);
  return j;
}

CountTable count_table_from_json(const Json& j) {
  return guarded("count table", [&] {
    CountTable table(j.at("class").get<std::string>(), j.at("labeled").get<bool>());
    for (const auto& row : j.at("values")) {
      const auto name = row.at("provenance").get<std::string>();
      Provenance p = Provenance::Formula;
      if (name == "series-chain") p = Provenance::SeriesChain;
      else if (name == "oracle") p = Provenance::Oracle;
      else if (name != "formula") fail(ErrorCode::ParseError, "unknown provenance " + name);
      mpz_class value;
      if (value.set_str(row.at("count").get<std::string>(), 10) != 0 || value < 0)
        fail(ErrorCode::ParseError, "count is not a non-negative decimal integer");
      table.set(row.at("n").get<int>(), std::move(value), p);
    }
    return table;
  });
}

Json to_json(const Census& census) {
  Json j = Json::object();
  j["n"] = census.n;
  Json rows = Json::array();
  for (const auto& row : census.rows)
    rows.push_back({{"n", census.n}, {"tag", row.tag}, {"labeled", row.labeled.get_str()}, {"unlabeled", row.unlabeled}});
  j["rows"] = std::move(rows);
  return j;
}

Census census_from_json(const Json& j) {
  return guarded("census", [&] {
    Census census;
    census.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) {
      mpz_class labeled;
      if (labeled.set_str(row.at("labeled").get<std::string>(), 10) != 0)
        fail(ErrorCode::ParseError, "labeled count is not a decimal integer");
      census.rows.push_back(CensusRow{row.at("tag").get<std::string>(), std::move(labeled),
                                      row.at("unlabeled").get<std::uint64_t>()});
    }
    return census;
  });
}

Json to_json(const CrossCheckReport& report, bool include_timing) {
  Json j = Json::object();
  j["checked_to"] = report.checked_to;
  Json list = Json::array();
  for (const auto& d : report.discrepancies)
    list.push_back({{"n", d.n}, {"check", d.check}, {"expected", d.expected}, {"actual", d.actual}});
  j["discrepancies"] = std::move(list);
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json to_json(const RatioReport& report, int digits) {
  Json j = Json::object();
  j["n_max"] = report.rows.empty() ? 0 : report.rows.back().n;
  j["bound_threshold"] = report.bound_threshold;
  j["u_over_s_decreasing_from"] = report.u_over_s_decreasing_from;
  j["s_gap_decreasing_from"] = report.s_gap_decreasing_from;
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"n", r.n},
                    {"b_ratio", r.b_ratio.to_scientific(digits)},
                    {"s_over_b", r.s_over_b.to_scientific(digits)},
                    {"u_over_s", r.u_over_s.to_scientific(digits)},
                    {"bound", r.bound.to_scientific(digits)}});
  j["rows"] = std::move(rows);
  Json unlabeled = Json::array();
  for (const auto& r : report.unlabeled_rows)
    unlabeled.push_back({{"n", r.n},
                         {"s_over_b", r.s_over_b.to_scientific(digits)},
                         {"u_over_s", r.u_over_s.to_scientific(digits)},
                         {"b_times_factorial_over_labeled", r.b_times_factorial_over_labeled.to_scientific(digits)}});
  j["unlabeled_rows"] = std::move(unlabeled);
  return j;
}

std::string ratio_report_csv(const RatioReport& report, int digits) {
  std::string out = "n,b_ratio,s_over_b,u_over_s,bound\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n) + ',' + r.b_ratio.to_scientific(digits) + ',' + r.s_over_b.to_scientific(digits) + ',' +
           r.u_over_s.to_scientific(digits) + ',' + r.bound.to_scientific(digits) + '\n';
  }
  return out;
}

Json to_json(const RatioInequalities& checks) {
  auto one = [](const InequalityCheck& c) { return Json{{"violations", c.violations}, {"threshold", c.threshold}}; };
  Json j = Json::object();
  j["n_max"] = checks.n_max;
  j["bicolored"] = one(checks.bicolored);
  j["split"] = one(checks.split);
  if (checks.unlabeled_bicolored) {
    j["unlabeled_bicolored"] = one(*checks.unlabeled_bicolored);
    j["unlabeled_difference_identity"] = checks.unlabeled_difference_identity;
  }
  return j;
}

}  // namespace splitspecies
