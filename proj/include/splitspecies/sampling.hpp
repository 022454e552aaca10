#pragma once

#include <cstdint>
#include <random>

#include "splitspecies/graph.hpp"

namespace splitspecies {

/// Draws use `rng() % bound` so a seed gives the same stream on every
/// standard library.
using Rng = std::mt19937_64;

int uniform_below(Rng& rng, int bound);
Permutation random_permutation(Rng& rng, int n);

/// Split graph on 0..n-1: a random clique of uniform size, every
/// clique-stable pair an edge with probability 1/2.
Graph random_split_graph(Rng& rng, int n);

/// Any graph on 0..n-1, each pair an edge with probability 1/2.
Graph random_graph(Rng& rng, int n);

}  // namespace splitspecies
