#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitspecies/enumeration.hpp"

namespace splitspecies {

/// sum_k C(n,k) 2^{k(n-k)}: choose the green vertices, then any subset of
/// green-red pairs as edges.
mpz_class bicolored_labeled(int n);

/// b_n - n b_{n-1}, with s_0 = 1.
mpz_class split_labeled(int n);

/// Bína–Přibil expression for the labeled split graphs. Evaluated with
/// exact rationals; throws NonIntegralResult if the sum is not an integer.
mpz_class split_labeled_bp(int n);

/// n! [x^n] U(x) from the labeled series chain.
mpz_class unbalanced_labeled(int n);
/// u_0..u_{max_n} from a single chain evaluation.
std::vector<mpz_class> unbalanced_labeled_table(int max_n);

enum class Provenance { Formula, SeriesChain, Oracle };

std::string_view to_string(Provenance p);

struct CountEntry {
  mpz_class value;
  Provenance provenance = Provenance::Formula;
};

/// Exact counts n -> value for one class, labeled or unlabeled.
class CountTable {
 public:
  CountTable(std::string kind, bool labeled) : kind_(std::move(kind)), labeled_(labeled) {}

  const std::string& kind() const { return kind_; }
  bool labeled() const { return labeled_; }

  void set(int n, mpz_class value, Provenance provenance);
  const CountEntry* find(int n) const;
  const std::map<int, CountEntry>& entries() const { return entries_; }

 private:
  std::string kind_;
  bool labeled_;
  std::map<int, CountEntry> entries_;
};

struct Discrepancy {
  int n = 0;
  std::string check;
  std::string expected;
  std::string actual;
};

struct CrossCheckReport {
  int checked_to = 0;
  std::vector<Discrepancy> discrepancies;
  std::int64_t elapsed_ms = 0;
};

struct CrossCheckOptions {
  /// Compare the formulas against exhaustive enumeration as well.
  bool with_oracle = true;
  int oracle_labeled_max = 6;
  int oracle_unlabeled_max = 7;
  /// Previously computed Bína–Přibil values ("split-bp", labeled). Entries
  /// found here are reused; fresh values are added.
  CountTable* bp_cache = nullptr;
};

/// Formula and series-chain counts against the enumerated `censuses`
/// (censuses[n] has size n): labeled for n <= labeled_max, unlabeled
/// (chain built from the enumerated split counts) for n <= unlabeled_max.
std::vector<Discrepancy> oracle_discrepancies(const std::vector<Census>& censuses, int labeled_max,
                                              int unlabeled_max);

/// Compares split_labeled with split_labeled_bp for 0 <= n <= max_n and,
/// optionally, the formula and series-chain counts with the oracle.
CrossCheckReport cross_check(int max_n, const CrossCheckOptions& options = {});

}  // namespace splitspecies
