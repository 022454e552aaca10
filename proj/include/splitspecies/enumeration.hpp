#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splitspecies/graph.hpp"
#include "splitspecies/split_structure.hpp"

namespace splitspecies {

enum class ClassTag {
  AllGraphs,
  Split,
  Balanced,
  Unbalanced,
  KCanonical,
  SCanonical,
  Ambiguous,
  ColoredSplit,
  Bicolored,
  BicoloredNoIsolatedGreen,
};

inline constexpr std::array<ClassTag, 10> kAllClassTags = {
    ClassTag::AllGraphs,  ClassTag::Split,      ClassTag::Balanced,  ClassTag::Unbalanced,
    ClassTag::KCanonical, ClassTag::SCanonical, ClassTag::Ambiguous, ClassTag::ColoredSplit,
    ClassTag::Bicolored,  ClassTag::BicoloredNoIsolatedGreen};

std::string_view to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view name);

/// Largest n accepted by the exhaustive enumerators for `tag`.
int max_enumeration_order(ClassTag tag);

using Structure = std::variant<Graph, ColoredSplitGraph, BicoloredGraph>;

/// Visits every labeled structure of size n exactly once. Graphs come in
/// ascending adjacency-word order (see graph_from_word); colored split
/// graphs list the S-max partitions of each graph by ascending clique word;
/// bicolored graphs come by ascending green word, then ascending adjacency word.
void for_each_labeled(int n, ClassTag tag, const std::function<void(const Structure&)>& visit);
std::vector<Structure> enumerate_labeled(int n, ClassTag tag);

mpz_class count_labeled(int n, ClassTag tag);
std::uint64_t count_unlabeled(int n, ClassTag tag);

struct CensusRow {
  std::string tag;
  mpz_class labeled;
  std::uint64_t unlabeled = 0;
};

/// Counts for every class tag plus the colored K-canonical class, which the
/// identities need but which has no tag of its own.
struct Census {
  int n = 0;
  std::vector<CensusRow> rows;

  const CensusRow& at(std::string_view tag) const;
  const CensusRow& at(ClassTag tag) const { return at(to_string(tag)); }
};

inline constexpr std::string_view kColoredKCanonicalTag = "colored-k-canonical";

/// One pass over all graphs and bicolored graphs of size n (n <= 7).
Census tabulate_census(int n);
/// tabulate_census, throwing IdentityViolation if any class relation fails.
Census class_census(int n);

struct IdentityResult {
  std::string name;
  bool holds = false;
};

/// Every class relation, in a fixed order, with its outcome on `census`.
std::vector<IdentityResult> census_identities(const Census& census);
/// The relations that do not hold (empty when all do).
std::vector<std::string> census_identity_failures(const Census& census);

}  // namespace splitspecies
