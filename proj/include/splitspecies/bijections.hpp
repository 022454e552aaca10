#pragma once

#include "splitspecies/graph.hpp"
#include "splitspecies/split_structure.hpp"

// Invertible, relabeling-equivariant decompositions of the unbalanced split
// graph classes. Sub-structures keep the labels they had in the whole.

namespace splitspecies {

/// A set of at least two labels with one distinguished element.
class PointedSet {
 public:
  static PointedSet make(VertexSet elements, int point);

  VertexSet elements() const { return elements_; }
  int point() const { return point_; }

  friend bool operator==(const PointedSet&, const PointedSet&) = default;

 private:
  PointedSet(VertexSet elements, int point) : elements_(elements), point_(point) {}
  VertexSet elements_;
  int point_ = 0;
};

/// K-canonical graph = (swing clique of size >= 2, colored split graph).
struct KCanonicalParts {
  VertexSet swings;
  ColoredSplitGraph rest;

  friend bool operator==(const KCanonicalParts&, const KCanonicalParts&) = default;
};

/// Ambiguous graph = (its swing vertex, balanced split graph).
struct AmbiguousParts {
  int swing = 0;
  Graph rest;

  friend bool operator==(const AmbiguousParts&, const AmbiguousParts&) = default;
};

/// Colored K-canonical graph = (pointed swing set, colored split graph).
struct ColoredKCanonicalParts {
  PointedSet swings;
  ColoredSplitGraph rest;

  friend bool operator==(const ColoredKCanonicalParts&, const ColoredKCanonicalParts&) = default;
};

KCanonicalParts uk_decompose(const Graph& g);
Graph uk_compose(VertexSet swings, const ColoredSplitGraph& rest);

AmbiguousParts amb_decompose(const Graph& g);
Graph amb_compose(int swing, const Graph& balanced);

ColoredKCanonicalParts cuk_decompose(const ColoredSplitGraph& c);
ColoredSplitGraph cuk_compose(const PointedSet& swings, const ColoredSplitGraph& rest);

/// Drops the edges inside the green clique.
BicoloredGraph split_to_bicolored(const ColoredSplitGraph& c);
/// Completes the green side to a clique; green vertices must not be isolated.
ColoredSplitGraph bicolored_to_split(const BicoloredGraph& b);

KCanonicalParts relabel(const KCanonicalParts& parts, const Permutation& p);
AmbiguousParts relabel(const AmbiguousParts& parts, const Permutation& p);
ColoredKCanonicalParts relabel(const ColoredKCanonicalParts& parts, const Permutation& p);

}  // namespace splitspecies
