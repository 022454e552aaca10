#include "splitspecies/sampling.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace splitspecies {

int uniform_below(Rng& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(uniform_below(rng, i + 1))]);
  return Permutation(std::move(image));
}

Graph random_split_graph(Rng& rng, int n) {
  const Permutation order = random_permutation(rng, n);
  const int clique_size = uniform_below(rng, n + 1);
  Graph g(VertexSet::range(n));
  for (int i = 0; i < clique_size; ++i) {
    for (int j = i + 1; j < clique_size; ++j) g.add_edge(order(i), order(j));
    for (int j = clique_size; j < n; ++j)
      if (rng() & 1u) g.add_edge(order(i), order(j));
  }
  return g;
}

Graph random_graph(Rng& rng, int n) {
  Graph g(VertexSet::range(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace splitspecies
