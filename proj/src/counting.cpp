#include "splitspecies/counting.hpp"

#include <chrono>

#include "splitspecies/enumeration.hpp"
#include "splitspecies/error.hpp"
#include "splitspecies/parallel.hpp"
#include "splitspecies/series.hpp"

namespace splitspecies {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class power(const mpz_class& base, int exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

mpz_class power_of_two(long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return out;
}

void require_nonnegative(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
}

}  // namespace

mpz_class bicolored_labeled(int n) {
  require_nonnegative(n);
  mpz_class total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * power_of_two(static_cast<long>(k) * (n - k));
  return total;
}

mpz_class split_labeled(int n) {
  require_nonnegative(n);
  if (n == 0) return 1;
  return bicolored_labeled(n) - n * bicolored_labeled(n - 1);
}

mpz_class split_labeled_bp(int n) {
  require_nonnegative(n);
  mpq_class total = 1;
  for (int k = 2; k <= n; ++k) {
    const int m = n - k;
    const mpz_class p = power_of_two(k - 1) - 1;
    // sum_{j=1}^{m} jk/(j+1) C(m,j) p^{m-j} = k/(m+1) sum_j j C(m+1,j+1) p^{m-j},
    // the inner sum taken by Horner's rule in p.
    mpz_class inner = 0;
    mpz_class coefficient = m >= 1 ? binomial(m + 1, 2) : mpz_class(0);  // C(m+1, j+1) at j = 1
    for (int j = 1; j <= m; ++j) {
      inner = inner * p + j * coefficient;
      coefficient = coefficient * (m - j) / (j + 2);
    }
    mpq_class correction(mpz_class(k) * inner, mpz_class(m + 1));
    correction.canonicalize();
    total += mpq_class(binomial(n, k)) * (mpq_class(power(power_of_two(k) - 1, m)) - correction);
  }
  total.canonicalize();
  if (total.get_den() != 1)
    fail(ErrorCode::NonIntegralResult, "Bína–Přibil sum is not an integer at n=" + std::to_string(n));
  return total.get_num();
}

std::vector<mpz_class> unbalanced_labeled_table(int max_n) {
  require_nonnegative(max_n);
  const auto counts = derive_labeled_chain(max_n).unbalanced.counts();
  std::vector<mpz_class> out;
  out.reserve(counts.size());
  for (const auto& c : counts) {
    if (c.get_den() != 1 || sgn(c) < 0) fail(ErrorCode::NonIntegralResult, "unbalanced count is not a natural number");
    out.push_back(c.get_num());
  }
  return out;
}

mpz_class unbalanced_labeled(int n) { return unbalanced_labeled_table(n).back(); }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::SeriesChain: return "series-chain";
    case Provenance::Oracle: return "oracle";
  }
  return "unknown";
}

void CountTable::set(int n, mpz_class value, Provenance provenance) {
  entries_[n] = CountEntry{std::move(value), provenance};
}

const CountEntry* CountTable::find(int n) const {
  const auto it = entries_.find(n);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

void compare(std::vector<Discrepancy>& out, int n, const std::string& check, const mpz_class& expected,
             const mpz_class& actual) {
  if (expected != actual) out.push_back(Discrepancy{n, check, expected.get_str(), actual.get_str()});
}

void compare_with_oracle(const std::vector<Census>& censuses, int labeled_max, int unlabeled_max,
                         std::vector<Discrepancy>& out) {
  if (labeled_max >= 0) {
    const LabeledChain chain = derive_labeled_chain(labeled_max);
    const std::vector<std::pair<ClassTag, const RationalSeries*>> species = {
        {ClassTag::Bicolored, &chain.bicolored},     {ClassTag::Split, &chain.split},
        {ClassTag::Unbalanced, &chain.unbalanced},   {ClassTag::Balanced, &chain.balanced},
        {ClassTag::ColoredSplit, &chain.colored_split}, {ClassTag::KCanonical, &chain.k_canonical},
        {ClassTag::SCanonical, &chain.k_canonical},  {ClassTag::Ambiguous, &chain.ambiguous},
        {ClassTag::BicoloredNoIsolatedGreen, &chain.colored_split}};
    for (const auto& [tag, series] : species) {
      const auto counts = series->counts();
      for (int n = 0; n <= labeled_max; ++n) {
        const mpq_class& c = counts[static_cast<std::size_t>(n)];
        if (c.get_den() != 1) {
          out.push_back(Discrepancy{n, "series-chain " + std::string(to_string(tag)) + " is integral",
                                    "integer", c.get_str()});
          continue;
        }
        compare(out, n, "oracle vs series-chain labeled " + std::string(to_string(tag)),
                censuses[static_cast<std::size_t>(n)].at(tag).labeled, c.get_num());
      }
    }
    for (int n = 0; n <= labeled_max; ++n) {
      const Census& census = censuses[static_cast<std::size_t>(n)];
      compare(out, n, "oracle vs formula labeled bicolored", census.at(ClassTag::Bicolored).labeled,
              bicolored_labeled(n));
      compare(out, n, "oracle vs formula labeled split", census.at(ClassTag::Split).labeled, split_labeled(n));
    }
  }

  if (unlabeled_max >= 0) {
    std::vector<mpz_class> base;
    for (int n = 0; n <= unlabeled_max; ++n)
      base.emplace_back(static_cast<unsigned long>(censuses[static_cast<std::size_t>(n)].at(ClassTag::Split).unlabeled));
    const UnlabeledChain chain = derive_unlabeled_chain(unlabeled_max, base);
    const std::vector<std::pair<ClassTag, const RationalSeries*>> species = {
        {ClassTag::Unbalanced, &chain.unbalanced},
        {ClassTag::Balanced, &chain.balanced},
        {ClassTag::Bicolored, &chain.bicolored}};
    for (const auto& [tag, series] : species)
      for (int n = 0; n <= unlabeled_max; ++n)
        compare(out, n, "oracle vs series-chain unlabeled " + std::string(to_string(tag)),
                mpz_class(static_cast<unsigned long>(censuses[static_cast<std::size_t>(n)].at(tag).unlabeled)),
                (*series)[n].get_num());
  }
}

}  // namespace

std::vector<Discrepancy> oracle_discrepancies(const std::vector<Census>& censuses, int labeled_max,
                                              int unlabeled_max) {
  if (std::max(labeled_max, unlabeled_max) >= static_cast<int>(censuses.size()))
    fail(ErrorCode::InsufficientBase, "oracle comparison needs a census for every n it covers");
  std::vector<Discrepancy> out;
  compare_with_oracle(censuses, labeled_max, unlabeled_max, out);
  return out;
}

CrossCheckReport cross_check(int max_n, const CrossCheckOptions& options) {
  if (max_n > 500) fail(ErrorCode::TooLarge, "cross-check is limited to n <= 500");
  const auto start = std::chrono::steady_clock::now();
  CrossCheckReport report;
  report.checked_to = max_n;

  if (max_n >= 0) {
    CountTable* cache = options.bp_cache;
    auto per_n = map_ranges(0, static_cast<std::uint64_t>(max_n) + 1, static_cast<std::uint64_t>(max_n) + 1,
                            [&](std::uint64_t lo, std::uint64_t) {
                              const int n = static_cast<int>(lo);
                              const CountEntry* cached = cache ? cache->find(n) : nullptr;
                              mpz_class bp = cached ? cached->value : split_labeled_bp(n);
                              return std::pair{split_labeled(n), std::move(bp)};
                            });
    for (int n = 0; n <= max_n; ++n) {
      auto& [corollary, bp] = per_n[static_cast<std::size_t>(n)];
      compare(report.discrepancies, n, "split_labeled vs split_labeled_bp", corollary, bp);
      if (cache && !cache->find(n)) cache->set(n, bp, Provenance::Formula);
    }
    if (options.with_oracle) {
      const int labeled_max = std::min(max_n, options.oracle_labeled_max);
      const int unlabeled_max = std::min(max_n, options.oracle_unlabeled_max);
      std::vector<Census> censuses;
      for (int n = 0; n <= std::max(labeled_max, unlabeled_max); ++n) censuses.push_back(tabulate_census(n));
      compare_with_oracle(censuses, labeled_max, unlabeled_max, report.discrepancies);
    }
  }

  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace splitspecies
