#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Matrix matrix_of(const splitspecies::Graph& g) {
  const auto labels = g.vertices().labels();
  const std::size_t n = labels.size();
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i != j && g.adjacent(labels[i], labels[j]);
  return m;
}

Matrix matrix_from_word(int n, std::uint64_t word) {
  Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((word >> bit) & 1u) m[i][j] = m[j][i] = true;
  return m;
}

namespace {

bool all_pairs(const Matrix& m, std::uint32_t set, bool want) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((set >> i) & 1u) && ((set >> j) & 1u) && m[i][j] != want) return false;
  return true;
}

}  // namespace

std::vector<Partition> ks_partitions(const Matrix& m) {
  const std::uint32_t all = (1u << m.size()) - 1u;
  std::vector<Partition> out;
  for (std::uint32_t k = 0; k <= all; ++k)
    if (all_pairs(m, k, true) && all_pairs(m, all & ~k, false)) out.push_back({k, all & ~k});
  return out;
}

bool is_split(const Matrix& m) { return !ks_partitions(m).empty(); }

std::uint32_t swing_set(const std::vector<Partition>& parts) {
  std::uint32_t swings = 0;
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const std::uint32_t diff = a.clique ^ b.clique;
      if (diff != 0 && (diff & (diff - 1)) == 0) swings |= diff;
    }
  return swings;
}

Kind classify(const Matrix& m) {
  const std::uint32_t swings = swing_set(ks_partitions(m));
  const int size = __builtin_popcount(swings);
  if (size == 0) return Kind::Balanced;
  if (size == 1) return Kind::Ambiguous;
  return all_pairs(m, swings, true) ? Kind::KCanonical : Kind::SCanonical;
}

std::vector<Partition> s_max(const Matrix& m) {
  auto parts = ks_partitions(m);
  int best = -1;
  for (const auto& p : parts) best = std::max(best, __builtin_popcount(p.stable));
  std::erase_if(parts, [&](const Partition& p) { return __builtin_popcount(p.stable) != best; });
  return parts;
}

namespace {

std::string form_for(const Matrix& m, const std::vector<int>& order) {
  std::string s;
  const std::size_t n = order.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) s.push_back(m[order[i]][order[j]] ? '1' : '0');
  return s;
}

}  // namespace

std::string canonical_form(const Matrix& m) {
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string s = form_for(m, order);
    if (first || s < best) best = std::move(s);
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::to_string(m.size()) + ":" + best;
}

std::string canonical_form_colored(const Matrix& m, const std::vector<int>& colors) {
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool first = true;
  do {
    if (!std::is_sorted(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; })) continue;
    std::string s = form_for(m, order);
    if (first || s < best) best = std::move(s);
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  std::string prefix;
  for (int c : colors) prefix.push_back(c == 0 ? 'g' : 'r');
  std::sort(prefix.begin(), prefix.end());
  return prefix + ":" + best;
}

int clique_number(const Matrix& m) {
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << m.size()); ++set)
    if (all_pairs(m, set, true)) best = std::max(best, __builtin_popcount(set));
  return best;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

LabeledCensus labeled_census(int n) {
  LabeledCensus c;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << pairs); ++word) {
    const Matrix m = matrix_from_word(n, word);
    const auto parts = ks_partitions(m);
    if (parts.empty()) continue;
    ++c.split;
    const auto colorings = static_cast<long>(s_max(m).size());
    c.colored_split += colorings;
    switch (classify(m)) {
      case Kind::Balanced: ++c.balanced; break;
      case Kind::Ambiguous: ++c.unbalanced; ++c.ambiguous; break;
      case Kind::KCanonical: ++c.unbalanced; ++c.k_canonical; c.colored_k_canonical += colorings; break;
      case Kind::SCanonical: ++c.unbalanced; ++c.s_canonical; break;
    }
  }
  return c;
}

mpz_class bicolored_count(int n, bool forbid_isolated_green) {
  mpz_class total = 0;
  for (std::uint32_t green = 0; green < (1u << n); ++green) {
    std::vector<std::pair<int, int>> cross;
    for (int g = 0; g < n; ++g)
      for (int r = 0; r < n; ++r)
        if (((green >> g) & 1u) && !((green >> r) & 1u)) cross.emplace_back(g, r);
    for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << cross.size()); ++edges) {
      if (forbid_isolated_green) {
        std::uint32_t touched = 0;
        for (std::size_t e = 0; e < cross.size(); ++e)
          if ((edges >> e) & 1u) touched |= 1u << cross[e].first;
        if ((touched & green) != green) continue;
      }
      ++total;
    }
  }
  return total;
}

}  // namespace oracle
