#include "splitspecies/split_structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitspecies {

std::string_view to_string(SplitClass c) {
  switch (c) {
    case SplitClass::Balanced: return "balanced";
    case SplitClass::Ambiguous: return "ambiguous";
    case SplitClass::KCanonical: return "k-canonical";
    case SplitClass::SCanonical: return "s-canonical";
  }
  return "unknown";
}

std::string_view to_string(SwingKind k) {
  switch (k) {
    case SwingKind::Empty: return "empty";
    case SwingKind::Singleton: return "singleton";
    case SwingKind::Clique: return "clique";
    case SwingKind::Stable: return "stable";
  }
  return "unknown";
}

bool is_ks_partition(const Graph& g, const KSPartition& p) {
  return p.clique.disjoint(p.stable) && (p.clique | p.stable) == g.vertices() && g.is_clique(p.clique) &&
         g.is_stable(p.stable);
}

std::vector<KSPartition> ks_partitions(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<KSPartition> out;
  // Ascending walk over the sub-words of `all`.
  std::uint32_t k = 0;
  while (true) {
    const KSPartition p{VertexSet(k), all - VertexSet(k)};
    if (g.is_clique(p.clique) && g.is_stable(p.stable)) out.push_back(p);
    if (k == all.bits()) break;
    k = (k - all.bits()) & all.bits();
  }
  return out;
}

namespace {

std::vector<KSPartition> require_partitions(const Graph& g) {
  auto parts = ks_partitions(g);
  if (parts.empty()) fail(ErrorCode::NotSplit, "not a split graph");
  return parts;
}

SwingReport report_from(const Graph& g, const std::vector<KSPartition>& parts) {
  SwingReport r;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      const VertexSet moved((parts[a].clique.bits() ^ parts[b].clique.bits()));
      if (moved.size() == 1) r.swings = r.swings | moved;
    }
  VertexSet always_clique = g.vertices();
  VertexSet always_stable = g.vertices();
  for (const auto& p : parts) {
    always_clique = always_clique & p.clique;
    always_stable = always_stable & p.stable;
  }
  r.joined = always_clique - r.swings;
  r.separated = always_stable - r.swings;
  if ((r.swings | r.joined | r.separated) != g.vertices())
    throw std::logic_error("a non-swing vertex changes sides between KS-partitions");

  switch (r.swings.size()) {
    case 0: r.kind = SwingKind::Empty; break;
    case 1: r.kind = SwingKind::Singleton; break;
    default:
      if (g.is_clique(r.swings))
        r.kind = SwingKind::Clique;
      else if (g.is_stable(r.swings))
        r.kind = SwingKind::Stable;
      else
        throw std::logic_error("swing set is neither a clique nor a stable set");
  }
  return r;
}

}  // namespace

SplitClass classify(const SwingReport& r) {
  switch (r.kind) {
    case SwingKind::Empty: return SplitClass::Balanced;
    case SwingKind::Singleton: return SplitClass::Ambiguous;
    case SwingKind::Clique: return SplitClass::KCanonical;
    case SwingKind::Stable: return SplitClass::SCanonical;
  }
  return SplitClass::Balanced;
}

namespace {

template <class Measure>
std::vector<KSPartition> maximizing(std::vector<KSPartition> parts, Measure measure) {
  int best = -1;
  for (const auto& p : parts) best = std::max(best, measure(p));
  std::erase_if(parts, [&](const KSPartition& p) { return measure(p) != best; });
  return parts;
}

void grow_clique(const Graph& g, int size, VertexSet candidates, int& best) {
  if (size + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    const int v = candidates.first();
    grow_clique(g, size + 1, candidates & g.neighbors(v), best);
    candidates = candidates.without(v);
  }
}

}  // namespace

SwingReport swing_report(const Graph& g) { return report_from(g, require_partitions(g)); }

SplitClass classify(const Graph& g) { return classify(swing_report(g)); }

std::vector<KSPartition> s_max_partitions(const Graph& g) {
  return maximizing(require_partitions(g), [](const KSPartition& p) { return p.stable.size(); });
}

std::vector<KSPartition> k_max_partitions(const Graph& g) {
  return maximizing(require_partitions(g), [](const KSPartition& p) { return p.clique.size(); });
}

std::optional<KSPartition> canonical_partition(const Graph& g) {
  const auto parts = require_partitions(g);
  switch (classify(report_from(g, parts))) {
    case SplitClass::Ambiguous: return std::nullopt;
    case SplitClass::Balanced: return parts.front();
    case SplitClass::KCanonical:
      return maximizing(parts, [](const KSPartition& p) { return p.clique.size(); }).front();
    case SplitClass::SCanonical:
      return maximizing(parts, [](const KSPartition& p) { return p.stable.size(); }).front();
  }
  return std::nullopt;
}

ColoredSplitGraph color(const Graph& g, const KSPartition& p) {
  if (!is_ks_partition(g, p)) fail(ErrorCode::NotAPartition, "not a KS-partition of the graph");
  int alpha = 0;
  for (const auto& q : ks_partitions(g)) alpha = std::max(alpha, q.stable.size());
  if (p.stable.size() != alpha) fail(ErrorCode::NotSMax, "KS-partition is not S-max");
  return ColoredSplitGraph::make(g, p.clique, p.stable);
}

ColoredSplitGraph ColoredSplitGraph::make(Graph graph, VertexSet green, VertexSet red) {
  const KSPartition p{green, red};
  if (!is_ks_partition(graph, p)) fail(ErrorCode::NotAPartition, "green/red is not a KS-partition");
  // S-max check: some other partition has a larger stable side iff a green
  // vertex has no red neighbor (it could move to the stable side).
  bool movable = false;
  green.for_each([&](int v) { movable = movable || graph.neighbors(v).disjoint(red); });
  if (movable) fail(ErrorCode::NotSMax, "green/red is not an S-max partition");
  return ColoredSplitGraph(std::move(graph), green, red);
}

int clique_number(const Graph& g) {
  int best = 0;
  grow_clique(g, 0, g.vertices(), best);
  return best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

ColoredSplitGraph relabel(const ColoredSplitGraph& c, const Permutation& p) {
  return ColoredSplitGraph::make(relabel(c.graph(), p), relabel(c.green(), p), relabel(c.red(), p));
}

CanonicalCode canonical_code(const ColoredSplitGraph& c) { return canonical_code_colored(c.graph(), c.green()); }

}  // namespace splitspecies
