#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace splitspecies {

inline constexpr int kDefaultBits = 256;

/// Owning MPFR value. Binary operations round to the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(int bits = kDefaultBits);
  BigFloat(const mpz_class& value, int bits = kDefaultBits);
  BigFloat(const mpq_class& value, int bits = kDefaultBits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int bits() const { return static_cast<int>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  /// value * 2^exponent, exact.
  BigFloat scaled_by_power_of_two(long exponent) const;
  BigFloat abs() const;

  double to_double() const;
  /// Fixed-point decimal with `digits` fractional digits, "C" style.
  std::string to_fixed(int digits) const;
  /// Scientific notation with `digits` significant digits.
  std::string to_scientific(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return (a <=> b) == 0; }

 private:
  mpfr_t value_;
};

enum class Parity { Even, Odd };

/// Even: sum over integers k of 2^{-k^2}. Odd: sum of 2^{-(k+1/2)^2}.
BigFloat c_constant(Parity parity, int bits = kDefaultBits);

/// c(n) C(n, floor(n/2)) 2^{n^2/4}.
BigFloat asymptotic_bicolored(int n, int bits = kDefaultBits);

struct RatioRow {
  int n = 0;
  BigFloat b_ratio;   // b_n / asymptotic_bicolored(n)
  BigFloat s_over_b;
  BigFloat u_over_s;
  BigFloat bound;     // n^2 / 2^{(n+1)/2}
};

struct UnlabeledRatioRow {
  int n = 0;
  BigFloat s_over_b;
  BigFloat u_over_s;
  BigFloat b_times_factorial_over_labeled;  // b~_n n! / b_n
};

struct RatioReport {
  std::vector<RatioRow> rows;  // n = 1..n_max
  std::vector<UnlabeledRatioRow> unlabeled_rows;
  /// Smallest N with u_n/s_n <= n^2/2^{(n+1)/2} for every n in [N, n_max].
  int bound_threshold = 0;
  /// Smallest N with u_n/s_n strictly decreasing on [N, n_max].
  int u_over_s_decreasing_from = 0;
  /// Smallest N with n b_{n-1}/b_n strictly decreasing on [N, n_max].
  int s_gap_decreasing_from = 0;
};

/// Exact b_n, s_n, u_n for n = 1..n_max (n_max <= 400) with the decision
/// fields computed in exact arithmetic. `unlabeled_split` (s~_0, s~_1, ...)
/// adds unlabeled rows for every n it covers.
RatioReport ratio_report(int n_max, const std::vector<mpz_class>& unlabeled_split = {},
                         int bits = kDefaultBits);

/// Exact test of u_n / s_n <= n^2 / 2^{(n+1)/2}.
bool unbalanced_bound_holds(int n, const mpz_class& u, const mpz_class& s);

struct InequalityCheck {
  std::vector<int> violations;
  /// One past the last violation, or the first n checked when there is none.
  int threshold = 0;
};

struct RatioInequalities {
  int n_max = 0;
  InequalityCheck bicolored;            // b_n / b_{n-1} >= 2^{(n+1)/2}
  InequalityCheck split;                // s_n / s_{n-1} >= 2^{(n+1)/2}
  std::optional<InequalityCheck> unlabeled_bicolored;  // b~_n / b~_{n-1} >= 2^{(n+1)/2} / n
  /// s~_n = b~_n - b~_{n-1} on every supplied n.
  bool unlabeled_difference_identity = true;
};

/// Labeled checks for 2 <= n <= n_max (n_max <= 500), all by squared
/// integer comparison. Unlabeled checks run over the supplied s~ values,
/// with b~ taken from `unlabeled_bicolored` when given (e.g. counted by
/// canonical forms) and from the series chain otherwise.
RatioInequalities check_b_ratio(int n_max, const std::vector<mpz_class>& unlabeled_split = {},
                                const std::vector<mpz_class>& unlabeled_bicolored = {});

}  // namespace splitspecies
