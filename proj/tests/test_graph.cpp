#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "splitspecies/graph.hpp"
#include "splitspecies/sampling.hpp"

using namespace splitspecies;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete(int n) {
  Graph g(VertexSet::range(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace

TEST_CASE("make_graph builds exactly the listed edges") {
  const Graph empty = make_graph(0, {});
  CHECK(empty.order() == 0);
  CHECK(empty.edge_count() == 0);

  const Graph k2 = make_graph(2, {{0, 1}});
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));
  CHECK(k2.edge_count() == 1);

  const Graph two_k2 = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(two_k2.edge_count() == 2);
  CHECK_FALSE(is_split(two_k2));
  CHECK_FALSE(oracle::is_split(oracle::matrix_of(two_k2)));
}

TEST_CASE("make_graph rejects bad input") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const SpeciesError& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { make_graph(3, {{0, 3}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { make_graph(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { make_graph(17, {}); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { make_graph(-1, {}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Permutation({0, 0, 1}); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { relabel(make_graph(3, {}), Permutation::identity(2)); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { canonical_code(make_graph(9, {})); }) == ErrorCode::TooLarge);
}

TEST_CASE("graph_from_word orders pairs by column") {
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  CHECK(pair_index(0, 3) == 3);
  const Graph g = graph_from_word(4, 0b100010);
  CHECK(g == make_graph(4, {{0, 2}, {2, 3}}));
  for (std::uint64_t w = 0; w < 64; ++w) {
    const Graph h = graph_from_word(4, w);
    CHECK(oracle::matrix_of(h) == oracle::matrix_from_word(4, w));
  }
}

TEST_CASE("relabel follows the permutation") {
  const Graph k2 = make_graph(2, {{0, 1}});
  CHECK(relabel(k2, Permutation::identity(2)) == k2);

  const Graph p3 = path(3);
  CHECK(relabel(p3, Permutation({2, 1, 0})) == p3);

  const Graph edge = make_graph(3, {{0, 1}});
  CHECK(relabel(edge, Permutation({1, 2, 0})) == make_graph(3, {{1, 2}}));

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + uniform_below(rng, 9);
    const Graph g = random_graph(rng, n);
    const Permutation p = random_permutation(rng, n);
    const Graph h = relabel(g, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(g.adjacent(i, j) == h.adjacent(p(i), p(j)));
    CHECK(relabel(h, p.inverse()) == g);
  }
}

TEST_CASE("complement") {
  CHECK(complement(make_graph(3, {})) == complete(3));
  CHECK(complement(make_graph(2, {{0, 1}})) == make_graph(2, {}));
  const Graph p4 = path(4);
  // 0-1-2-3 complements to 1-3-0-2
  CHECK(complement(p4) == make_graph(4, {{1, 3}, {0, 3}, {0, 2}}));
  CHECK(canonical_code(complement(p4)) == canonical_code(p4));
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1 + uniform_below(rng, 16));
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(complete(3)) == std::vector<int>{2, 2, 2});
  CHECK(degree_sequence(path(3)) == std::vector<int>{2, 1, 1});
  CHECK(degree_sequence(make_graph(4, {{0, 1}, {2, 3}})) == std::vector<int>{1, 1, 1, 1});
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, uniform_below(rng, 17));
    const auto d = degree_sequence(g);
    CHECK(std::is_sorted(d.rbegin(), d.rend()));
    CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.edge_count());
  }
}

TEST_CASE("is_split small cases") {
  CHECK(is_split(complete(3)));
  CHECK_FALSE(is_split(cycle(4)));
  CHECK_FALSE(is_split(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_split(make_graph(0, {})));
  CHECK(is_split(path(4)));
  CHECK_FALSE(is_split(cycle(5)));
}

TEST_CASE("is_split agrees with the bipartition search on every graph up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t words = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t w = 0; w < words; ++w) {
      const Graph g = graph_from_word(n, w);
      const bool split = is_split(g);
      REQUIRE(split == oracle::is_split(oracle::matrix_from_word(n, w)));
      REQUIRE(is_split(complement(g)) == split);
    }
  }
}

TEST_CASE("is_split agrees with the bipartition search on random graphs of 7 and 8 vertices") {
  Rng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 7 + trial % 2;
    // Half the samples are split by construction so both answers occur often.
    const Graph g = trial % 4 < 2 ? random_graph(rng, n) : random_split_graph(rng, n);
    const bool split = is_split(g);
    REQUIRE(split == oracle::is_split(oracle::matrix_of(g)));
    REQUIRE(is_split(relabel(g, random_permutation(rng, n))) == split);
  }
}

TEST_CASE("is_split is invariant under every relabeling for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << pair_count(n)); ++w) {
      const Graph g = graph_from_word(n, w);
      const bool split = is_split(g);
      for (const auto& p : perms) REQUIRE(is_split(relabel(g, p)) == split);
    }
  }
}

TEST_CASE("canonical codes identify isomorphism classes") {
  const Graph p3 = path(3);
  for (const auto& p : all_permutations(3)) CHECK(canonical_code(relabel(p3, p)) == canonical_code(p3));
  CHECK(canonical_code(complete(3)) != canonical_code(p3));

  std::set<CanonicalCode> four;
  for (std::uint64_t w = 0; w < 64; ++w) four.insert(canonical_code(graph_from_word(4, w)));
  CHECK(four.size() == 11);
}

TEST_CASE("canonical codes match the full permutation search for n <= 6") {
  // Codes and brute-force forms must induce the same partition of the labeled graphs.
  const std::size_t classes[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::map<CanonicalCode, std::string> code_to_form;
    std::map<std::string, CanonicalCode> form_to_code;
    std::map<CanonicalCode, mpz_class> orbit_size;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << pair_count(n)); ++w) {
      const Graph g = graph_from_word(n, w);
      const CanonicalCode code = canonical_code(g);
      const std::string form = oracle::canonical_form(oracle::matrix_from_word(n, w));
      auto [a, fresh_a] = code_to_form.emplace(code, form);
      auto [b, fresh_b] = form_to_code.emplace(form, code);
      REQUIRE(a->second == form);
      REQUIRE(b->second == code);
      orbit_size[code] += 1;
    }
    CHECK(code_to_form.size() == classes[n]);
    if (n <= 5) {
      // Orbit-stabilizer: each class has n!/|Aut| labelings.
      const auto perms = all_permutations(n);
      for (const auto& [code, size] : orbit_size) {
        Graph representative;
        for (std::uint64_t w = 0;; ++w) {
          representative = graph_from_word(n, w);
          if (canonical_code(representative) == code) break;
        }
        long automorphisms = 0;
        for (const auto& p : perms) automorphisms += relabel(representative, p) == representative;
        CHECK(size * automorphisms == oracle::factorial(n));
      }
    }
  }
}

TEST_CASE("canonical codes are stable under random relabeling at 7 and 8 vertices") {
  Rng rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 7 + trial % 2;
    const Graph g = trial % 2 ? random_split_graph(rng, n) : random_graph(rng, n);
    CHECK(canonical_code(relabel(g, random_permutation(rng, n))) == canonical_code(g));
  }
  // A few pairs with equal degree sequences but different structure.
  CHECK(canonical_code(cycle(6)) != canonical_code(make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(canonical_code(cycle(8)) != canonical_code(make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}})));
}

TEST_CASE("bicolored canonical codes keep colors apart") {
  const Graph one = make_graph(1, {});
  CHECK(canonical_code_bicolored(make_bicolored(one, VertexSet::of({0}))) !=
        canonical_code_bicolored(make_bicolored(one, VertexSet())));

  const Graph two = make_graph(2, {});
  CHECK(canonical_code_bicolored(make_bicolored(two, VertexSet::of({0, 1}))) ==
        canonical_code_bicolored(relabel(make_bicolored(two, VertexSet::of({0, 1})), Permutation({1, 0}))));

  std::set<CanonicalCode> codes;
  for (std::uint32_t green = 0; green < 4; ++green) {
    codes.insert(canonical_code_bicolored(make_bicolored(two, VertexSet(green))));
    if (green == 1 || green == 2) {
      Graph g = two;
      g.add_edge(0, 1);
      codes.insert(canonical_code_bicolored(make_bicolored(g, VertexSet(green))));
    }
  }
  CHECK(codes.size() == 4);
}

TEST_CASE("colored canonical codes match the color-preserving search for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    std::map<CanonicalCode, std::string> code_to_form;
    std::map<std::string, CanonicalCode> form_to_code;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << pair_count(n)); ++w) {
      const Graph g = graph_from_word(n, w);
      const auto m = oracle::matrix_from_word(n, w);
      for (std::uint32_t green = 0; green < (1u << n); ++green) {
        std::vector<int> colors(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) colors[v] = (green >> v) & 1u ? 0 : 1;
        const CanonicalCode code = canonical_code_colored(g, VertexSet(green));
        const std::string form = oracle::canonical_form_colored(m, colors);
        auto [a, fresh_a] = code_to_form.emplace(code, form);
        auto [b, fresh_b] = form_to_code.emplace(form, code);
        REQUIRE(a->second == form);
        REQUIRE(b->second == code);
      }
    }
  }
}

TEST_CASE("make_bicolored rejects monochromatic edges") {
  CHECK_THROWS_AS(make_bicolored(make_graph(2, {{0, 1}}), VertexSet::of({0, 1})), SpeciesError);
  CHECK_NOTHROW(make_bicolored(make_graph(2, {{0, 1}}), VertexSet::of({0})));
}
