#include "splitspecies/bijections.hpp"

#include <stdexcept>
#include <string>

namespace splitspecies {

PointedSet PointedSet::make(VertexSet elements, int point) {
  if (elements.size() < 2) fail(ErrorCode::TooSmall, "pointed set needs at least two elements");
  if (!elements.contains(point)) fail(ErrorCode::OutOfRange, "point is not an element of the set");
  return PointedSet(elements, point);
}

namespace {

SwingReport report_expecting(const Graph& g, SplitClass want) {
  const std::string expected = "expected class " + std::string(to_string(want)) + ", got ";
  if (ks_partitions(g).empty()) fail(ErrorCode::WrongClass, expected + "a non-split graph");
  SwingReport report = swing_report(g);
  if (classify(report) != want) fail(ErrorCode::WrongClass, expected + std::string(to_string(classify(report))));
  return report;
}

// Union of two label-disjoint graphs, no edges between them.
Graph disjoint_union(const Graph& a, VertexSet extra) {
  Graph g(a.vertices() | extra);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  return g;
}

}  // namespace

KCanonicalParts uk_decompose(const Graph& g) {
  const SwingReport report = report_expecting(g, SplitClass::KCanonical);
  const KSPartition canon = *canonical_partition(g);
  const Graph rest = g.without(report.swings);
  return KCanonicalParts{report.swings,
                         ColoredSplitGraph::make(rest, canon.clique - report.swings, canon.stable)};
}

Graph uk_compose(VertexSet swings, const ColoredSplitGraph& rest) {
  if (swings.size() < 2) fail(ErrorCode::TooSmall, "swing set needs at least two vertices");
  if (!swings.disjoint(rest.vertices())) fail(ErrorCode::LabelClash, "swing labels overlap the colored graph");
  if (swings.bound() > kMaxVertices) fail(ErrorCode::OutOfRange, "labels must lie in 0..15");
  Graph g = disjoint_union(rest.graph(), swings);
  swings.for_each([&](int a) {
    (rest.green() | swings.without(a)).for_each([&](int k) { g.add_edge(a, k); });
  });
  return g;
}

AmbiguousParts amb_decompose(const Graph& g) {
  const SwingReport report = report_expecting(g, SplitClass::Ambiguous);
  const int a = report.swings.first();
  return AmbiguousParts{a, g.without(report.swings)};
}

Graph amb_compose(int swing, const Graph& balanced) {
  if (swing < 0 || swing >= kMaxVertices) fail(ErrorCode::OutOfRange, "labels must lie in 0..15");
  if (balanced.vertices().contains(swing)) fail(ErrorCode::LabelClash, "swing label already used");
  report_expecting(balanced, SplitClass::Balanced);
  const KSPartition only = ks_partitions(balanced).front();
  Graph g = disjoint_union(balanced, VertexSet::single(swing));
  only.clique.for_each([&](int k) { g.add_edge(swing, k); });
  return g;
}

ColoredKCanonicalParts cuk_decompose(const ColoredSplitGraph& c) {
  const SwingReport report = report_expecting(c.graph(), SplitClass::KCanonical);
  const VertexSet red_swings = report.swings & c.red();
  if (red_swings.size() != 1) throw std::logic_error("S-max coloring must put exactly one swing vertex in red");
  const Graph rest = c.graph().without(report.swings);
  return ColoredKCanonicalParts{PointedSet::make(report.swings, red_swings.first()),
                                ColoredSplitGraph::make(rest, c.green() - report.swings, c.red() - report.swings)};
}

ColoredSplitGraph cuk_compose(const PointedSet& swings, const ColoredSplitGraph& rest) {
  Graph g = uk_compose(swings.elements(), rest);
  return ColoredSplitGraph::make(std::move(g), rest.green() | swings.elements().without(swings.point()),
                                 rest.red().with(swings.point()));
}

BicoloredGraph split_to_bicolored(const ColoredSplitGraph& c) {
  Graph g = c.graph();
  const auto greens = c.green().labels();
  for (std::size_t i = 0; i < greens.size(); ++i)
    for (std::size_t j = i + 1; j < greens.size(); ++j) g.remove_edge(greens[i], greens[j]);
  return BicoloredGraph{std::move(g), c.green(), c.red()};
}

ColoredSplitGraph bicolored_to_split(const BicoloredGraph& b) {
  b.green.for_each([&](int v) {
    if (b.graph.degree(v) == 0) fail(ErrorCode::IsolatedGreen, "green vertex " + std::to_string(v) + " is isolated");
  });
  Graph g = b.graph;
  const auto greens = b.green.labels();
  for (std::size_t i = 0; i < greens.size(); ++i)
    for (std::size_t j = i + 1; j < greens.size(); ++j) g.add_edge(greens[i], greens[j]);
  return ColoredSplitGraph::make(std::move(g), b.green, b.red);
}

KCanonicalParts relabel(const KCanonicalParts& parts, const Permutation& p) {
  return KCanonicalParts{relabel(parts.swings, p), relabel(parts.rest, p)};
}

AmbiguousParts relabel(const AmbiguousParts& parts, const Permutation& p) {
  return AmbiguousParts{p(parts.swing), relabel(parts.rest, p)};
}

ColoredKCanonicalParts relabel(const ColoredKCanonicalParts& parts, const Permutation& p) {
  return ColoredKCanonicalParts{PointedSet::make(relabel(parts.swings.elements(), p), p(parts.swings.point())),
                                relabel(parts.rest, p)};
}

}  // namespace splitspecies
