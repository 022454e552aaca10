#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "splitspecies/graph.hpp"

namespace splitspecies {

/// Clique part and stable part of a split graph.
struct KSPartition {
  VertexSet clique;
  VertexSet stable;

  friend bool operator==(const KSPartition&, const KSPartition&) = default;
};

enum class SplitClass { Balanced, Ambiguous, KCanonical, SCanonical };

std::string_view to_string(SplitClass c);

enum class SwingKind { Empty, Singleton, Clique, Stable };

std::string_view to_string(SwingKind k);

/// Swing vertices of a split graph and the split of the remaining vertices
/// into those adjacent to every swing vertex (`joined`) and those adjacent to
/// none (`separated`).
struct SwingReport {
  VertexSet swings;
  SwingKind kind = SwingKind::Empty;
  VertexSet joined;
  VertexSet separated;

  friend bool operator==(const SwingReport&, const SwingReport&) = default;
};

/// Split graph together with one of its S-max partitions: green is the
/// clique side, red the stable side. Only constructible through
/// `color`/`make`, which enforce that the coloring is S-max.
class ColoredSplitGraph {
 public:
  /// The empty colored graph.
  ColoredSplitGraph() = default;

  static ColoredSplitGraph make(Graph graph, VertexSet green, VertexSet red);

  const Graph& graph() const { return graph_; }
  VertexSet green() const { return green_; }
  VertexSet red() const { return red_; }
  VertexSet vertices() const { return graph_.vertices(); }

  friend bool operator==(const ColoredSplitGraph&, const ColoredSplitGraph&) = default;

 private:
  ColoredSplitGraph(Graph graph, VertexSet green, VertexSet red)
      : graph_(std::move(graph)), green_(green), red_(red) {}

  Graph graph_;
  VertexSet green_;
  VertexSet red_;
};

bool is_ks_partition(const Graph& g, const KSPartition& p);

/// All KS-partitions ordered by the clique's bit word.
std::vector<KSPartition> ks_partitions(const Graph& g);

SwingReport swing_report(const Graph& g);
SplitClass classify(const Graph& g);
SplitClass classify(const SwingReport& report);

std::vector<KSPartition> s_max_partitions(const Graph& g);
std::vector<KSPartition> k_max_partitions(const Graph& g);

/// Unique K-max partition (K-canonical), unique S-max partition
/// (S-canonical), the only partition (balanced); nothing when ambiguous.
std::optional<KSPartition> canonical_partition(const Graph& g);

ColoredSplitGraph color(const Graph& g, const KSPartition& p);

int clique_number(const Graph& g);
int independence_number(const Graph& g);

ColoredSplitGraph relabel(const ColoredSplitGraph& c, const Permutation& p);
CanonicalCode canonical_code(const ColoredSplitGraph& c);

}  // namespace splitspecies
