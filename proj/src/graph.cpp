#include "splitspecies/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace splitspecies {

VertexSet VertexSet::of(std::initializer_list<int> labels) {
  VertexSet s;
  for (int v : labels) {
    if (v < 0 || v >= kMaxVertices) fail(ErrorCode::OutOfRange, "label " + std::to_string(v) + " outside 0..15");
    s = s.with(v);
  }
  return s;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.size() > 32) fail(ErrorCode::TooLarge, "permutation longer than 32");
  std::uint64_t seen = 0;
  for (int v : image_) {
    if (v < 0 || v >= size() || ((seen >> v) & 1u) != 0)
      fail(ErrorCode::InvalidPermutation, "image is not a permutation of 0..n-1");
    seen |= std::uint64_t{1} << v;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Graph::Graph(VertexSet vertices) : vertices_(vertices) {
  if (vertices.bound() > kMaxVertices) fail(ErrorCode::TooLarge, "labels must lie in 0..15");
}

int Graph::edge_count() const {
  int twice = 0;
  vertices_.for_each([&](int v) { twice += degree(v); });
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (!vertices_.contains(u) || !vertices_.contains(v))
    fail(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") leaves the vertex set");
  if (u == v) fail(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
  rows_[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
}

void Graph::remove_edge(int u, int v) {
  if (!vertices_.contains(u) || !vertices_.contains(v)) return;
  rows_[static_cast<std::size_t>(u)] &= static_cast<std::uint16_t>(~(1u << v));
  rows_[static_cast<std::size_t>(v)] &= static_cast<std::uint16_t>(~(1u << u));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  vertices_.for_each([&](int u) {
    (neighbors(u) - VertexSet::range(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep = keep & vertices_;
  Graph h(keep);
  keep.for_each([&](int v) {
    h.rows_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(rows_[static_cast<std::size_t>(v)] & keep.bits());
  });
  return h;
}

bool Graph::is_clique(VertexSet set) const {
  bool ok = true;
  set.for_each([&](int v) { ok = ok && (set.without(v)).subset_of(neighbors(v)); });
  return ok;
}

bool Graph::is_stable(VertexSet set) const {
  bool ok = true;
  set.for_each([&](int v) { ok = ok && neighbors(v).disjoint(set); });
  return ok;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
  if (n > kMaxVertices) fail(ErrorCode::TooLarge, "graphs are limited to 16 vertices");
  Graph g(VertexSet::range(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorCode::OutOfRange, "endpoint of (" + std::to_string(u) + "," + std::to_string(v) + ") not below n");
    g.add_edge(u, v);
  }
  return g;
}

Graph graph_from_word(int n, std::uint64_t word) {
  if (n > kMaxVertices) fail(ErrorCode::TooLarge, "graphs are limited to 16 vertices");
  Graph g(VertexSet::range(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((word >> pair_index(i, j)) & 1u) g.add_edge(i, j);
  return g;
}

BicoloredGraph make_bicolored(Graph graph, VertexSet green) {
  if (!green.subset_of(graph.vertices())) fail(ErrorCode::OutOfRange, "green vertices outside the graph");
  VertexSet red = graph.vertices() - green;
  if (!graph.is_stable(green) || !graph.is_stable(red))
    fail(ErrorCode::NotBicolored, "an edge joins two vertices of the same color");
  return BicoloredGraph{std::move(graph), green, red};
}

VertexSet relabel(VertexSet set, const Permutation& p) {
  VertexSet out;
  set.for_each([&](int v) {
    if (v >= p.size()) fail(ErrorCode::LengthMismatch, "permutation does not cover label " + std::to_string(v));
    out = out.with(p(v));
  });
  return out;
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (g.vertices().bound() > p.size())
    fail(ErrorCode::LengthMismatch, "permutation of length " + std::to_string(p.size()) +
                                        " does not cover the graph's labels");
  if (p.size() > kMaxVertices) fail(ErrorCode::TooLarge, "permutation moves labels past 15");
  Graph h(relabel(g.vertices(), p));
  for (auto [u, v] : g.edges()) h.add_edge(p(u), p(v));
  return h;
}

BicoloredGraph relabel(const BicoloredGraph& b, const Permutation& p) {
  return BicoloredGraph{relabel(b.graph, p), relabel(b.green, p), relabel(b.red, p)};
}

Graph complement(const Graph& g) {
  Graph h(g.vertices());
  const auto labels = g.vertices().labels();
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (!g.adjacent(labels[a], labels[b])) h.add_edge(labels[a], labels[b]);
  return h;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  g.vertices().for_each([&](int v) { d.push_back(g.degree(v)); });
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool is_split_degrees(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  // m = max{i : d_i >= i - 1}, 1-based.
  std::size_t m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] >= static_cast<int>(i)) m = i + 1;
  long head = std::accumulate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m), 0L);
  long tail = std::accumulate(d.begin() + static_cast<std::ptrdiff_t>(m), d.end(), 0L);
  const long mm = static_cast<long>(m);
  return head == mm * (mm - 1) + tail;
}

bool is_split(const Graph& g) { return is_split_degrees(degree_sequence(g)); }

namespace {

// Lexicographically least adjacency string (pairs in column order, first
// pair most significant) over all orderings that list vertices by
// non-decreasing key. Keys are isomorphism invariants, so the restriction
// keeps the minimum canonical.
class LexMinSearch {
 public:
  LexMinSearch(const Graph& g, const std::vector<int>& labels, std::vector<int> keys)
      : n_(static_cast<int>(labels.size())), keys_(std::move(keys)), total_bits_(pair_count(n_)) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (g.adjacent(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]))
          adj_[static_cast<std::size_t>(a)] |= 1u << b;
    required_ = keys_;
    std::sort(required_.begin(), required_.end());
  }

  std::uint64_t run() {
    if (n_ > 0) extend(0, 0, 0);
    return best_;
  }

 private:
  void extend(int pos, std::uint32_t used, std::uint64_t prefix) {
    if (pos == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        found_ = true;
      }
      return;
    }
    const int len = pair_count(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      if (keys_[static_cast<std::size_t>(v)] != required_[static_cast<std::size_t>(pos)]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | ((adj_[static_cast<std::size_t>(v)] >> order_[static_cast<std::size_t>(i)]) & 1u);
      if (found_ && next > (best_ >> (total_bits_ - len))) continue;
      order_[static_cast<std::size_t>(pos)] = v;
      extend(pos + 1, used | (1u << v), next);
    }
  }

  int n_;
  std::vector<int> keys_;
  std::vector<int> required_;
  int total_bits_;
  std::array<std::uint32_t, kMaxCanonicalVertices> adj_{};
  std::array<int, kMaxCanonicalVertices> order_{};
  std::uint64_t best_ = 0;
  bool found_ = false;
};

// Degree, then the sum of neighbor degrees (below 64 for n <= 8).
int degree_key(const Graph& g, int v) {
  int around = 0;
  g.neighbors(v).for_each([&](int u) { around += g.degree(u); });
  return g.degree(v) * 64 + around;
}

CanonicalCode encode(int n, bool colored, int green_count, std::uint64_t bits) {
  return CanonicalCode((std::uint64_t(n) << 60) | (std::uint64_t(colored ? 1 : 0) << 59) |
                       (std::uint64_t(green_count) << 52) | bits);
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) fail(ErrorCode::TooLarge, "canonical codes are limited to 8 vertices");
  const auto labels = g.vertices().labels();
  std::vector<int> keys;
  for (int v : labels) keys.push_back(-degree_key(g, v));
  return encode(g.order(), false, 0, LexMinSearch(g, labels, std::move(keys)).run());
}

CanonicalCode canonical_code_colored(const Graph& g, VertexSet green) {
  if (g.order() > kMaxCanonicalVertices) fail(ErrorCode::TooLarge, "canonical codes are limited to 8 vertices");
  const auto labels = g.vertices().labels();
  std::vector<int> keys;
  // Green vertices come first; within a color, higher degree first.
  for (int v : labels) keys.push_back((green.contains(v) ? 0 : 1000) - degree_key(g, v));
  return encode(g.order(), true, (green & g.vertices()).size(), LexMinSearch(g, labels, std::move(keys)).run());
}

CanonicalCode canonical_code_bicolored(const BicoloredGraph& b) {
  return canonical_code_colored(b.graph, b.green);
}

}  // namespace splitspecies
