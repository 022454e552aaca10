#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "splitspecies/error.hpp"

namespace splitspecies {

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxCanonicalVertices = 8;

/// A set of vertex labels drawn from {0..15}, stored as a bit word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n <= 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
  static VertexSet of(std::initializer_list<int> labels);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return v >= 0 && v < 32 && ((bits_ >> v) & 1u) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(VertexSet other) const { return (bits_ & other.bits_) == 0; }
  /// Lowest label; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  /// One past the largest label, 0 for the empty set.
  constexpr int bound() const { return 32 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1u << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1u << v)); }

  std::vector<int> labels() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) fn(std::countr_zero(rest));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// A bijection on {0..size-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Simple undirected graph on a set of labels inside {0..15}. Graphs built
/// by make_graph use labels 0..n-1; induced subgraphs keep the labels of
/// the parent.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexSet vertices);

  VertexSet vertices() const { return vertices_; }
  int order() const { return vertices_.size(); }
  bool adjacent(int u, int v) const {
    return vertices_.contains(u) && ((rows_[static_cast<std::size_t>(u)] >> v) & 1u) != 0;
  }
  VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;

  /// Both endpoints must already be vertices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  Graph induced(VertexSet keep) const;
  Graph without(VertexSet drop) const { return induced(vertices_ - drop); }

  bool is_clique(VertexSet set) const;
  bool is_stable(VertexSet set) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  std::array<std::uint16_t, kMaxVertices> rows_{};
};

/// Graph with an ordered green/red coloring; every edge joins a green and a red vertex.
struct BicoloredGraph {
  Graph graph;
  VertexSet green;
  VertexSet red;

  friend bool operator==(const BicoloredGraph&, const BicoloredGraph&) = default;
};

/// Total-order key identifying a graph up to isomorphism (or up to
/// color-preserving isomorphism for bicolored graphs).
class CanonicalCode {
 public:
  constexpr CanonicalCode() = default;
  constexpr explicit CanonicalCode(std::uint64_t value) : value_(value) {}
  constexpr std::uint64_t value() const { return value_; }
  friend constexpr auto operator<=>(CanonicalCode, CanonicalCode) = default;

 private:
  std::uint64_t value_ = 0;
};

struct CanonicalCodeHash {
  std::size_t operator()(CanonicalCode c) const noexcept {
    std::uint64_t x = c.value();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Builds the graph on labels 0..n-1 whose edge (i,j), i<j, is present iff
/// bit `pair_index(i,j)` of `word` is set. Pairs are ordered column-wise:
/// (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_word(int n, std::uint64_t word);
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

BicoloredGraph make_bicolored(Graph graph, VertexSet green);

VertexSet relabel(VertexSet set, const Permutation& p);
Graph relabel(const Graph& g, const Permutation& p);
BicoloredGraph relabel(const BicoloredGraph& b, const Permutation& p);

Graph complement(const Graph& g);

/// Non-increasing.
std::vector<int> degree_sequence(const Graph& g);

/// Hammer–Simeone degree test.
bool is_split(const Graph& g);
bool is_split_degrees(std::vector<int> degrees);

CanonicalCode canonical_code(const Graph& g);
CanonicalCode canonical_code_bicolored(const BicoloredGraph& b);
/// Code up to isomorphisms that map `green` onto green; edges are unrestricted.
CanonicalCode canonical_code_colored(const Graph& g, VertexSet green);

}  // namespace splitspecies
