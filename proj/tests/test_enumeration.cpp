#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "splitspecies/enumeration.hpp"
#include "splitspecies/json_io.hpp"

using namespace splitspecies;

namespace {

ErrorCode error_of(auto fn) {
  try {
    fn();
  } catch (const SpeciesError& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

std::uint64_t word_of(const Graph& g) {
  std::uint64_t w = 0;
  for (auto [u, v] : g.edges()) w |= std::uint64_t{1} << pair_index(u, v);
  return w;
}

struct UnlabeledOracle {
  std::uint64_t split = 0, balanced = 0, unbalanced = 0, k_canonical = 0, s_canonical = 0, ambiguous = 0,
                colored_split = 0;
};

// Isomorphism classes counted with full permutation search.
UnlabeledOracle unlabeled_oracle(int n, bool with_colored) {
  std::set<std::string> split, balanced, kc, sc, amb, colored;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << pair_count(n)); ++w) {
    const oracle::Matrix m = oracle::matrix_from_word(n, w);
    if (!oracle::is_split(m)) continue;
    const std::string form = oracle::canonical_form(m);
    split.insert(form);
    switch (oracle::classify(m)) {
      case oracle::Kind::Balanced: balanced.insert(form); break;
      case oracle::Kind::KCanonical: kc.insert(form); break;
      case oracle::Kind::SCanonical: sc.insert(form); break;
      case oracle::Kind::Ambiguous: amb.insert(form); break;
    }
    if (!with_colored) continue;
    for (const auto& p : oracle::s_max(m)) {
      std::vector<int> colors(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = (p.clique >> v) & 1u ? 0 : 1;
      colored.insert(oracle::canonical_form_colored(m, colors));
    }
  }
  return {split.size(),       balanced.size(), kc.size() + sc.size() + amb.size(), kc.size(), sc.size(), amb.size(),
          colored.size()};
}

std::uint64_t unlabeled_bicolored_oracle(int n) {
  std::set<std::string> forms;
  for (std::uint32_t green = 0; green < (1u << n); ++green) {
    std::vector<std::pair<int, int>> cross;
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      colors[static_cast<std::size_t>(u)] = (green >> u) & 1u ? 0 : 1;
      for (int v = u + 1; v < n; ++v)
        if (((green >> u) & 1u) != ((green >> v) & 1u)) cross.emplace_back(u, v);
    }
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << cross.size()); ++e) {
      oracle::Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
      for (std::size_t i = 0; i < cross.size(); ++i)
        if ((e >> i) & 1u) {
          auto [u, v] = cross[i];
          m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
          m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        }
      forms.insert(oracle::canonical_form_colored(m, colors));
    }
  }
  return forms.size();
}

mpz_class bicolored_closed_form(int n) {
  mpz_class total = 0;
  for (int k = 0; k <= n; ++k) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(k * (n - k)));
    total += oracle::binomial(n, k) * power;
  }
  return total;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_labeled(2, ClassTag::Split).size() == 2);
  CHECK(count_labeled(3, ClassTag::Split) == 8);
  CHECK(count_labeled(3, ClassTag::Unbalanced) == 8);
  CHECK(count_labeled(3, ClassTag::Balanced) == 0);
  CHECK(enumerate_labeled(1, ClassTag::Bicolored).size() == 2);
  CHECK(count_labeled(4, ClassTag::Split) == 58);
  CHECK(count_labeled(4, ClassTag::Bicolored) == 162);
  CHECK(count_labeled(0, ClassTag::Split) == 1);
  CHECK(count_unlabeled(4, ClassTag::Split) == 9);
  CHECK(count_unlabeled(2, ClassTag::Bicolored) == 4);

  CHECK(error_of([] { enumerate_labeled(9, ClassTag::Split); }) == ErrorCode::TooLarge);
  CHECK(error_of([] { enumerate_labeled(8, ClassTag::Balanced); }) == ErrorCode::TooLarge);
  CHECK(error_of([] { count_labeled(8, ClassTag::Bicolored); }) == ErrorCode::TooLarge);
  CHECK(error_of([] { class_census(8); }) == ErrorCode::TooLarge);
}

TEST_CASE("class tags round trip through their names") {
  for (ClassTag tag : kAllClassTags) CHECK(parse_class_tag(to_string(tag)) == tag);
  CHECK_FALSE(parse_class_tag("cographs").has_value());
}

TEST_CASE("enumeration order is deterministic and duplicate free") {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t last = 0;
    bool first = true;
    std::set<std::uint64_t> seen;
    for_each_labeled(n, ClassTag::Split, [&](const Structure& s) {
      const std::uint64_t w = word_of(std::get<Graph>(s));
      if (!first) CHECK(w > last);
      first = false;
      last = w;
      seen.insert(w);
    });
    CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == count_labeled(n, ClassTag::Split));

    std::set<std::pair<std::uint64_t, std::uint32_t>> colored;
    for_each_labeled(n, ClassTag::ColoredSplit, [&](const Structure& s) {
      const auto& c = std::get<ColoredSplitGraph>(s);
      CHECK(colored.insert({word_of(c.graph()), c.green().bits()}).second);
    });

    std::pair<std::uint32_t, std::uint64_t> prev{0, 0};
    bool started = false;
    for_each_labeled(n, ClassTag::Bicolored, [&](const Structure& s) {
      const auto& b = std::get<BicoloredGraph>(s);
      for (auto [u, v] : b.graph.edges()) CHECK(b.green.contains(u) != b.green.contains(v));
      CHECK((b.green | b.red) == VertexSet::range(n));
      const std::pair<std::uint32_t, std::uint64_t> key{b.green.bits(), word_of(b.graph)};
      if (started) CHECK(key > prev);
      started = true;
      prev = key;
    });
  }
  CHECK(enumerate_labeled(5, ClassTag::Ambiguous) == enumerate_labeled(5, ClassTag::Ambiguous));
}

TEST_CASE("labeled counts agree with brute force for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const auto o = oracle::labeled_census(n);
    const Census c = class_census(n);
    CHECK(c.at(ClassTag::Split).labeled == o.split);
    CHECK(c.at(ClassTag::Balanced).labeled == o.balanced);
    CHECK(c.at(ClassTag::Unbalanced).labeled == o.unbalanced);
    CHECK(c.at(ClassTag::KCanonical).labeled == o.k_canonical);
    CHECK(c.at(ClassTag::SCanonical).labeled == o.s_canonical);
    CHECK(c.at(ClassTag::Ambiguous).labeled == o.ambiguous);
    CHECK(c.at(ClassTag::ColoredSplit).labeled == o.colored_split);
    CHECK(c.at(kColoredKCanonicalTag).labeled == o.colored_k_canonical);
    CHECK(c.at(ClassTag::Bicolored).labeled == oracle::bicolored_count(n, false));
    CHECK(c.at(ClassTag::BicoloredNoIsolatedGreen).labeled == oracle::bicolored_count(n, true));
    mpz_class all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, static_cast<unsigned long>(pair_count(n)));
    CHECK(c.at(ClassTag::AllGraphs).labeled == all);
    CHECK(count_labeled(n, ClassTag::KCanonical) == o.k_canonical);
  }
}

TEST_CASE("bicolored counts match the closed form for n <= 7") {
  for (int n = 0; n <= 7; ++n) CHECK(count_labeled(n, ClassTag::Bicolored) == bicolored_closed_form(n));
}

TEST_CASE("unlabeled counts agree with brute force") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const UnlabeledOracle o = unlabeled_oracle(n, n <= 5);
    const Census c = tabulate_census(n);
    CHECK(c.at(ClassTag::Split).unlabeled == o.split);
    CHECK(c.at(ClassTag::Balanced).unlabeled == o.balanced);
    CHECK(c.at(ClassTag::Unbalanced).unlabeled == o.unbalanced);
    CHECK(c.at(ClassTag::KCanonical).unlabeled == o.k_canonical);
    CHECK(c.at(ClassTag::SCanonical).unlabeled == o.s_canonical);
    CHECK(c.at(ClassTag::Ambiguous).unlabeled == o.ambiguous);
    if (n <= 5) {
      CHECK(c.at(ClassTag::ColoredSplit).unlabeled == o.colored_split);
      CHECK(c.at(ClassTag::Bicolored).unlabeled == unlabeled_bicolored_oracle(n));
    }
  }
}

TEST_CASE("class relations hold for n <= 7") {
  std::vector<std::uint64_t> split;
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const Census c = class_census(n);
    for (const auto& r : census_identities(c)) CHECK_MESSAGE(r.holds, r.name);
    CHECK(census_identity_failures(c).empty());
    split.push_back(c.at(ClassTag::Split).unlabeled);

    for (bool labeled : {true, false}) {
      auto get = [&](ClassTag t) { return labeled ? c.at(t).labeled : mpz_class(static_cast<unsigned long>(c.at(t).unlabeled)); };
      CHECK(get(ClassTag::Split) == get(ClassTag::Balanced) + get(ClassTag::Unbalanced));
      CHECK(get(ClassTag::Unbalanced) ==
            get(ClassTag::KCanonical) + get(ClassTag::SCanonical) + get(ClassTag::Ambiguous));
      CHECK(get(ClassTag::KCanonical) == get(ClassTag::SCanonical));
    }
    CHECK(c.at(ClassTag::ColoredSplit).labeled - c.at(kColoredKCanonicalTag).labeled ==
          c.at(ClassTag::Split).labeled - c.at(ClassTag::KCanonical).labeled);
    CHECK(c.at(ClassTag::ColoredSplit).unlabeled == c.at(ClassTag::Split).unlabeled);

    std::uint64_t below = 0, upto = 0;
    for (int k = 0; k < n; ++k) below += split[static_cast<std::size_t>(k)];
    upto = below + split.back();
    CHECK(c.at(ClassTag::Unbalanced).unlabeled == below);
    CHECK(c.at(ClassTag::Bicolored).unlabeled == upto);
    if (n <= 6) CHECK(c.at(ClassTag::ColoredSplit).labeled == c.at(ClassTag::BicoloredNoIsolatedGreen).labeled);
  }
}

TEST_CASE("a census with a broken relation is reported") {
  Census c = tabulate_census(4);
  for (auto& row : c.rows)
    if (row.tag == "balanced") row.labeled += 1;
  const auto failures = census_identity_failures(c);
  CHECK_FALSE(failures.empty());
}

TEST_CASE("census matches the golden files") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const Census golden = census_from_json(read_json(std::string(SPLITSPECIES_TESTDATA) + "/census-n" + std::to_string(n) + ".json"));
    const Census fresh = tabulate_census(n);
    REQUIRE(golden.n == n);
    REQUIRE(golden.rows.size() == fresh.rows.size());
    for (std::size_t i = 0; i < fresh.rows.size(); ++i) {
      CHECK(golden.rows[i].tag == fresh.rows[i].tag);
      CHECK(golden.rows[i].labeled == fresh.rows[i].labeled);
      CHECK(golden.rows[i].unlabeled == fresh.rows[i].unlabeled);
    }
  }
}

// Published sequence values (labeled and unlabeled split graphs).
TEST_CASE("spot values at n = 7") {
  const Census c = tabulate_census(7);
  CHECK(c.at(ClassTag::Split).labeled == 202484);
  CHECK(c.at(ClassTag::Split).unlabeled == 164);
  CHECK(c.at(ClassTag::Ambiguous).labeled == 34860);
  CHECK(c.at(ClassTag::Bicolored).unlabeled == 258);
  CHECK(count_unlabeled(7, ClassTag::KCanonical) == 38);
}
