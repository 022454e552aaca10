#include "splitspecies/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "splitspecies/parallel.hpp"

namespace splitspecies {

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::AllGraphs: return "all";
    case ClassTag::Split: return "split";
    case ClassTag::Balanced: return "balanced";
    case ClassTag::Unbalanced: return "unbalanced";
    case ClassTag::KCanonical: return "k-canonical";
    case ClassTag::SCanonical: return "s-canonical";
    case ClassTag::Ambiguous: return "ambiguous";
    case ClassTag::ColoredSplit: return "colored-split";
    case ClassTag::Bicolored: return "bicolored";
    case ClassTag::BicoloredNoIsolatedGreen: return "bicolored-no-isolated-green";
  }
  return "unknown";
}

std::optional<ClassTag> parse_class_tag(std::string_view name) {
  for (ClassTag tag : kAllClassTags)
    if (to_string(tag) == name) return tag;
  return std::nullopt;
}

int max_enumeration_order(ClassTag tag) {
  return (tag == ClassTag::AllGraphs || tag == ClassTag::Split) ? 8 : 7;
}

namespace {

constexpr std::size_t kSlots = kAllClassTags.size() + 1;
constexpr std::size_t kColoredKSlot = kAllClassTags.size();

constexpr std::size_t slot(ClassTag tag) { return static_cast<std::size_t>(tag); }

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

struct Tally {
  std::array<std::uint64_t, kSlots> labeled{};
  std::array<CodeSet, kSlots> codes;

  void merge(Tally&& other) {
    for (std::size_t i = 0; i < kSlots; ++i) {
      labeled[i] += other.labeled[i];
      if (codes[i].empty())
        codes[i] = std::move(other.codes[i]);
      else
        codes[i].insert(other.codes[i].begin(), other.codes[i].end());
    }
  }
};

struct Needs {
  bool classify = false;  // split subclasses and colored graphs
  bool codes = false;
  bool all_codes = false;  // canonical code of every graph, split or not
};

constexpr std::uint64_t kChunks = 256;

void check_order(int n, ClassTag tag) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  if (n > max_enumeration_order(tag))
    fail(ErrorCode::TooLarge, "exhaustive enumeration of " + std::string(to_string(tag)) + " is limited to n <= " +
                                  std::to_string(max_enumeration_order(tag)));
}

bool is_graph_tag(ClassTag tag) { return tag != ClassTag::Bicolored && tag != ClassTag::BicoloredNoIsolatedGreen; }

std::optional<ClassTag> tag_of(SplitClass c) {
  switch (c) {
    case SplitClass::Balanced: return ClassTag::Balanced;
    case SplitClass::Ambiguous: return ClassTag::Ambiguous;
    case SplitClass::KCanonical: return ClassTag::KCanonical;
    case SplitClass::SCanonical: return ClassTag::SCanonical;
  }
  return std::nullopt;
}

Tally scan_graph_range(int n, std::uint64_t lo, std::uint64_t hi, Needs needs) {
  Tally t;
  for (std::uint64_t word = lo; word < hi; ++word) {
    const Graph g = graph_from_word(n, word);
    ++t.labeled[slot(ClassTag::AllGraphs)];
    std::optional<CanonicalCode> code;
    if (needs.all_codes) {
      code = canonical_code(g);
      t.codes[slot(ClassTag::AllGraphs)].insert(*code);
    }
    if (!is_split(g)) continue;
    ++t.labeled[slot(ClassTag::Split)];
    if (needs.codes && !code) code = canonical_code(g);
    if (needs.codes) t.codes[slot(ClassTag::Split)].insert(*code);
    if (!needs.classify) continue;

    const SplitClass cls = classify(g);
    std::array<ClassTag, 2> tags{*tag_of(cls), ClassTag::Unbalanced};
    const std::size_t tag_count = cls == SplitClass::Balanced ? 1 : 2;
    for (std::size_t i = 0; i < tag_count; ++i) {
      ++t.labeled[slot(tags[i])];
      if (needs.codes) t.codes[slot(tags[i])].insert(*code);
    }
    for (const KSPartition& p : s_max_partitions(g)) {
      ++t.labeled[slot(ClassTag::ColoredSplit)];
      std::optional<CanonicalCode> colored;
      if (needs.codes) {
        colored = canonical_code_colored(g, p.clique);
        t.codes[slot(ClassTag::ColoredSplit)].insert(*colored);
      }
      if (cls == SplitClass::KCanonical) {
        ++t.labeled[kColoredKSlot];
        if (needs.codes) t.codes[kColoredKSlot].insert(*colored);
      }
    }
  }
  return t;
}

// Green-red pairs (u < v) in adjacency-word order, so bit i of an edge word
// selects pair i and edge words ascend with adjacency words.
std::vector<std::pair<int, int>> cross_pairs(VertexSet green, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (green.contains(u) != green.contains(v)) pairs.emplace_back(u, v);
  return pairs;
}

BicoloredGraph bicolored_from_word(int n, VertexSet green, const std::vector<std::pair<int, int>>& pairs,
                                   std::uint64_t word) {
  Graph g(VertexSet::range(n));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((word >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
  return BicoloredGraph{std::move(g), green, VertexSet::range(n) - green};
}

bool has_isolated_green(const BicoloredGraph& b) {
  bool isolated = false;
  b.green.for_each([&](int v) { isolated = isolated || b.graph.degree(v) == 0; });
  return isolated;
}

Tally scan_bicolored(int n, bool codes) {
  auto per_coloring = map_ranges(0, std::uint64_t{1} << n, kChunks, [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    for (std::uint64_t green_word = lo; green_word < hi; ++green_word) {
      const VertexSet green(static_cast<std::uint32_t>(green_word));
      const auto pairs = cross_pairs(green, n);
      for (std::uint64_t word = 0; word < (std::uint64_t{1} << pairs.size()); ++word) {
        const BicoloredGraph b = bicolored_from_word(n, green, pairs, word);
        const bool star = !has_isolated_green(b);
        ++t.labeled[slot(ClassTag::Bicolored)];
        if (star) ++t.labeled[slot(ClassTag::BicoloredNoIsolatedGreen)];
        if (codes) {
          const CanonicalCode c = canonical_code_bicolored(b);
          t.codes[slot(ClassTag::Bicolored)].insert(c);
          if (star) t.codes[slot(ClassTag::BicoloredNoIsolatedGreen)].insert(c);
        }
      }
    }
    return t;
  });
  Tally total;
  for (auto& t : per_coloring) total.merge(std::move(t));
  return total;
}

Tally scan_graphs(int n, Needs needs) {
  const std::uint64_t words = std::uint64_t{1} << pair_count(n);
  auto parts = map_ranges(0, words, kChunks,
                          [&](std::uint64_t lo, std::uint64_t hi) { return scan_graph_range(n, lo, hi, needs); });
  Tally total;
  for (auto& t : parts) total.merge(std::move(t));
  return total;
}

Tally scan_for(int n, ClassTag tag, bool codes) {
  check_order(n, tag);
  if (!is_graph_tag(tag)) return scan_bicolored(n, codes);
  Needs needs;
  needs.codes = codes;
  needs.all_codes = codes && tag == ClassTag::AllGraphs;
  needs.classify = tag != ClassTag::AllGraphs && tag != ClassTag::Split;
  return scan_graphs(n, needs);
}

}  // namespace

void for_each_labeled(int n, ClassTag tag, const std::function<void(const Structure&)>& visit) {
  check_order(n, tag);
  if (!is_graph_tag(tag)) {
    for (std::uint64_t green_word = 0; green_word < (std::uint64_t{1} << n); ++green_word) {
      const VertexSet green(static_cast<std::uint32_t>(green_word));
      const auto pairs = cross_pairs(green, n);
      for (std::uint64_t word = 0; word < (std::uint64_t{1} << pairs.size()); ++word) {
        BicoloredGraph b = bicolored_from_word(n, green, pairs, word);
        if (tag == ClassTag::BicoloredNoIsolatedGreen && has_isolated_green(b)) continue;
        visit(Structure(std::move(b)));
      }
    }
    return;
  }
  const std::uint64_t words = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t word = 0; word < words; ++word) {
    Graph g = graph_from_word(n, word);
    if (tag == ClassTag::AllGraphs) {
      visit(Structure(std::move(g)));
      continue;
    }
    if (!is_split(g)) continue;
    switch (tag) {
      case ClassTag::Split: visit(Structure(std::move(g))); break;
      case ClassTag::ColoredSplit:
        for (const KSPartition& p : s_max_partitions(g))
          visit(Structure(ColoredSplitGraph::make(g, p.clique, p.stable)));
        break;
      default: {
        const SplitClass cls = classify(g);
        const bool wanted = tag == ClassTag::Unbalanced ? cls != SplitClass::Balanced : tag_of(cls) == tag;
        if (wanted) visit(Structure(std::move(g)));
      }
    }
  }
}

std::vector<Structure> enumerate_labeled(int n, ClassTag tag) {
  std::vector<Structure> out;
  for_each_labeled(n, tag, [&](const Structure& s) { out.push_back(s); });
  return out;
}

mpz_class count_labeled(int n, ClassTag tag) {
  check_order(n, tag);
  if (tag == ClassTag::AllGraphs) {
    mpz_class all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, static_cast<unsigned long>(pair_count(n)));
    return all;
  }
  const Tally t = scan_for(n, tag, false);
  return mpz_class(static_cast<unsigned long>(t.labeled[slot(tag)]));
}

std::uint64_t count_unlabeled(int n, ClassTag tag) {
  const Tally t = scan_for(n, tag, true);
  return t.codes[slot(tag)].size();
}

const CensusRow& Census::at(std::string_view tag) const {
  for (const auto& row : rows)
    if (row.tag == tag) return row;
  fail(ErrorCode::OutOfRange, "no census row for " + std::string(tag));
}

Census tabulate_census(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  if (n > 7) fail(ErrorCode::TooLarge, "class census is limited to n <= 7");
  Tally t = scan_graphs(n, Needs{true, true, true});
  t.merge(scan_bicolored(n, true));

  Census census;
  census.n = n;
  for (ClassTag tag : kAllClassTags)
    census.rows.push_back(CensusRow{std::string(to_string(tag)),
                                    mpz_class(static_cast<unsigned long>(t.labeled[slot(tag)])),
                                    t.codes[slot(tag)].size()});
  census.rows.push_back(CensusRow{std::string(kColoredKCanonicalTag),
                                  mpz_class(static_cast<unsigned long>(t.labeled[kColoredKSlot])),
                                  t.codes[kColoredKSlot].size()});
  return census;
}

Census class_census(int n) {
  Census census = tabulate_census(n);
  const auto failures = census_identity_failures(census);
  if (!failures.empty()) fail(ErrorCode::IdentityViolation, "census n=" + std::to_string(n) + ": " + failures.front());
  return census;
}

std::vector<IdentityResult> census_identities(const Census& c) {
  std::vector<IdentityResult> results;
  auto check = [&](bool ok, const std::string& what) { results.push_back(IdentityResult{what, ok}); };
  const auto& S = c.at(ClassTag::Split);
  const auto& B = c.at(ClassTag::Balanced);
  const auto& U = c.at(ClassTag::Unbalanced);
  const auto& UK = c.at(ClassTag::KCanonical);
  const auto& US = c.at(ClassTag::SCanonical);
  const auto& UA = c.at(ClassTag::Ambiguous);
  const auto& CS = c.at(ClassTag::ColoredSplit);
  const auto& CUK = c.at(kColoredKCanonicalTag);
  const auto& BCS = c.at(ClassTag::BicoloredNoIsolatedGreen);

  check(S.labeled == B.labeled + U.labeled, "labeled: split = balanced + unbalanced");
  check(S.unlabeled == B.unlabeled + U.unlabeled, "unlabeled: split = balanced + unbalanced");
  check(U.labeled == UK.labeled + US.labeled + UA.labeled, "labeled: unbalanced = k-canonical + s-canonical + ambiguous");
  check(U.unlabeled == UK.unlabeled + US.unlabeled + UA.unlabeled,
        "unlabeled: unbalanced = k-canonical + s-canonical + ambiguous");
  check(UK.labeled == US.labeled, "labeled: k-canonical = s-canonical");
  check(UK.unlabeled == US.unlabeled, "unlabeled: k-canonical = s-canonical");
  check(CS.labeled - CUK.labeled == S.labeled - UK.labeled, "labeled: colored - colored k-canonical = split - k-canonical");
  check(CS.unlabeled + UK.unlabeled == S.unlabeled + CUK.unlabeled,
        "unlabeled: colored - colored k-canonical = split - k-canonical");
  check(CS.unlabeled == S.unlabeled, "unlabeled: colored split = split");
  check(CS.labeled == BCS.labeled, "labeled: colored split = bicolored without isolated green");
  check(CS.unlabeled == BCS.unlabeled, "unlabeled: colored split = bicolored without isolated green");
  return results;
}

std::vector<std::string> census_identity_failures(const Census& census) {
  std::vector<std::string> failures;
  for (const auto& r : census_identities(census))
    if (!r.holds) failures.push_back(r.name);
  return failures;
}

}  // namespace splitspecies
