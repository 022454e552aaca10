#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace splitspecies {

/// EGF: the coefficient of x^n is |F[n]| / n!. OGF: the coefficient of x^n
/// is the number of unlabeled structures. Arithmetic is identical for both;
/// the tag only stops the two from being mixed.
enum class Convention { EGF, OGF };

std::string_view to_string(Convention c);

/// Power series with exact rational coefficients, truncated after x^order.
class RationalSeries {
 public:
  RationalSeries(Convention convention, int order);
  RationalSeries(Convention convention, std::vector<mpq_class> coefficients);

  static RationalSeries constant(Convention convention, const mpq_class& value, int order);
  /// Series whose structure counts (see counts()) are the given integers.
  static RationalSeries from_counts(Convention convention, const std::vector<mpz_class>& counts);

  Convention convention() const { return convention_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  RationalSeries truncated(int order) const;

  /// n!·[x^n] under EGF, [x^n] under OGF.
  std::vector<mpq_class> counts() const;
  /// True when every count is a non-negative integer.
  bool has_natural_counts() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  Convention convention_;
  std::vector<mpq_class> coeffs_;
};

RationalSeries add(const RationalSeries& a, const RationalSeries& b);
RationalSeries sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries scale(const RationalSeries& a, const mpq_class& factor);
/// Needs a non-zero constant term in `b`.
RationalSeries div(const RationalSeries& a, const RationalSeries& b);

inline RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) { return add(a, b); }
inline RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) { return sub(a, b); }
inline RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) { return mul(a, b); }
inline RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) { return div(a, b); }

enum class SeriesName {
  E,
  X,
  Egeq1,
  Egeq2,
  OneOverOneMinusX,
  /// (2 - x - 2e^{-x}) / (1 - x); EGF only.
  Afactor,
  /// ((2 - X)E - 2) / ((1 - X)E) with E = e^x; equals Afactor. EGF only.
  UFactorLabeled,
  /// Same species expression with E = 1/(1-x); equals x/(1-x). OGF only.
  UFactorUnlabeled,
};

std::string_view to_string(SeriesName name);

/// Generating function of the named (virtual) species in the given convention.
RationalSeries series(SeriesName name, Convention convention, int order);

/// Labeled generating functions derived from the bicolored closed form.
struct LabeledChain {
  RationalSeries bicolored;
  RationalSeries split;
  RationalSeries unbalanced;
  RationalSeries balanced;
  RationalSeries colored_split;
  RationalSeries k_canonical;
  RationalSeries ambiguous;
};

LabeledChain derive_labeled_chain(int order);

struct UnlabeledChain {
  RationalSeries split;
  RationalSeries unbalanced;
  RationalSeries balanced;
  RationalSeries bicolored;
};

/// `split_counts[n]` is the number of unlabeled split graphs on n vertices;
/// at least order + 1 values are required.
UnlabeledChain derive_unlabeled_chain(int order, const std::vector<mpz_class>& split_counts);

}  // namespace splitspecies
