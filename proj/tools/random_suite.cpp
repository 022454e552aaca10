#include "random_suite.hpp"

#include <map>
#include <string>

#include "splitspecies/bijections.hpp"
#include "splitspecies/sampling.hpp"

namespace splitspecies::cli {

namespace {

class Ledger {
 public:
  void record(int sample, const std::string& check, bool ok, const Graph& g) {
    ++counts_[check];
    if (!ok) failures_.push_back({{"sample", sample}, {"check", check}, {"graph", to_json(g)}});
  }

  // Runs `fn`, counting a thrown SpeciesError as a failure.
  template <class Fn>
  void guarded(int sample, const std::string& check, const Graph& g, Fn fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const SpeciesError&) {
      ok = false;
    }
    record(sample, check, ok, g);
  }

  Json counts() const {
    Json j = Json::object();
    for (const auto& [name, count] : counts_) j[name] = count;
    return j;
  }
  const Json& failures() const { return failures_; }

 private:
  std::map<std::string, int> counts_;
  Json failures_ = Json::array();
};

void check_graph(Ledger& ledger, int sample, const Graph& g, const Permutation& p, Rng& rng) {
  const Graph moved = relabel(g, p);
  const SplitClass cls = classify(g);
  ledger.record(sample, "relabel preserves class", classify(moved) == cls, g);

  switch (cls) {
    case SplitClass::KCanonical:
    case SplitClass::SCanonical: {
      // S-canonical graphs are complements of K-canonical ones.
      const Graph k = cls == SplitClass::KCanonical ? g : complement(g);
      ledger.guarded(sample, "uk round trip", g, [&] {
        const auto parts = uk_decompose(k);
        return uk_compose(parts.swings, parts.rest) == k &&
               uk_decompose(uk_compose(parts.swings, parts.rest)) == parts;
      });
      ledger.guarded(sample, "uk equivariance", g, [&] {
        return uk_decompose(relabel(k, p)) == relabel(uk_decompose(k), p);
      });
      break;
    }
    case SplitClass::Ambiguous:
      ledger.guarded(sample, "amb round trip", g, [&] {
        const auto parts = amb_decompose(g);
        return amb_compose(parts.swing, parts.rest) == g && amb_decompose(amb_compose(parts.swing, parts.rest)) == parts;
      });
      ledger.guarded(sample, "amb equivariance", g,
                     [&] { return amb_decompose(moved) == relabel(amb_decompose(g), p); });
      break;
    case SplitClass::Balanced:
      break;
  }

  const auto partitions = s_max_partitions(g);
  const ColoredSplitGraph colored = color(g, partitions[static_cast<std::size_t>(uniform_below(rng, static_cast<int>(partitions.size())))]);
  ledger.guarded(sample, "bicolored round trip", g, [&] {
    const BicoloredGraph b = split_to_bicolored(colored);
    return bicolored_to_split(b) == colored && split_to_bicolored(bicolored_to_split(b)) == b;
  });
  ledger.guarded(sample, "bicolored equivariance", g, [&] {
    return split_to_bicolored(relabel(colored, p)) == relabel(split_to_bicolored(colored), p);
  });
  if (cls == SplitClass::KCanonical) {
    ledger.guarded(sample, "cuk round trip", g, [&] {
      const auto parts = cuk_decompose(colored);
      return cuk_compose(parts.swings, parts.rest) == colored &&
             cuk_decompose(cuk_compose(parts.swings, parts.rest)) == parts;
    });
    ledger.guarded(sample, "cuk equivariance", g, [&] {
      return cuk_decompose(relabel(colored, p)) == relabel(cuk_decompose(colored), p);
    });
  }
}

}  // namespace

Json run_random_suite(std::uint64_t seed, int samples, int max_n) {
  Rng rng(seed);
  Ledger ledger;
  for (int sample = 0; sample < samples; ++sample) {
    const int n = 1 + uniform_below(rng, max_n);
    const Graph g = random_split_graph(rng, n);
    const Permutation p = random_permutation(rng, n);
    check_graph(ledger, sample, g, p, rng);
  }
  Json report = Json::object();
  report["suite"] = "random";
  report["seed"] = seed;
  report["samples"] = samples;
  report["max_n"] = max_n;
  report["checks"] = ledger.counts();
  report["failures"] = ledger.failures();
  report["passed"] = ledger.failures().empty();
  return report;
}

}  // namespace splitspecies::cli
