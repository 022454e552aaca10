#include "splitspecies/series.hpp"

#include <algorithm>
#include <string>

#include "splitspecies/counting.hpp"
#include "splitspecies/error.hpp"

namespace splitspecies {

std::string_view to_string(Convention c) { return c == Convention::EGF ? "egf" : "ogf"; }

std::string_view to_string(SeriesName name) {
  switch (name) {
    case SeriesName::E: return "E";
    case SeriesName::X: return "X";
    case SeriesName::Egeq1: return "E>=1";
    case SeriesName::Egeq2: return "E>=2";
    case SeriesName::OneOverOneMinusX: return "1/(1-X)";
    case SeriesName::Afactor: return "A";
    case SeriesName::UFactorLabeled: return "U/S labeled";
    case SeriesName::UFactorUnlabeled: return "U/S unlabeled";
  }
  return "unknown";
}

RationalSeries::RationalSeries(Convention convention, int order)
    : convention_(convention), coeffs_(static_cast<std::size_t>(std::max(order, 0) + 1)) {
  if (order < 0) fail(ErrorCode::OutOfRange, "negative truncation order");
}

RationalSeries::RationalSeries(Convention convention, std::vector<mpq_class> coefficients)
    : convention_(convention), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) fail(ErrorCode::OutOfRange, "series needs at least a constant term");
  for (auto& c : coeffs_) c.canonicalize();
}

RationalSeries RationalSeries::constant(Convention convention, const mpq_class& value, int order) {
  RationalSeries s(convention, order);
  s.coeffs_[0] = value;
  return s;
}

RationalSeries RationalSeries::from_counts(Convention convention, const std::vector<mpz_class>& counts) {
  std::vector<mpq_class> coeffs;
  coeffs.reserve(counts.size());
  mpz_class factorial = 1;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (n > 0) factorial *= static_cast<unsigned long>(n);
    coeffs.emplace_back(convention == Convention::EGF ? mpq_class(counts[n], factorial) : mpq_class(counts[n]));
  }
  return RationalSeries(convention, std::move(coeffs));
}

RationalSeries RationalSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  return RationalSeries(convention_,
                        std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + std::max(order, 0) + 1));
}

std::vector<mpq_class> RationalSeries::counts() const {
  std::vector<mpq_class> out;
  out.reserve(coeffs_.size());
  mpz_class factorial = 1;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n > 0) factorial *= static_cast<unsigned long>(n);
    out.push_back(convention_ == Convention::EGF ? mpq_class(coeffs_[n] * factorial) : coeffs_[n]);
  }
  return out;
}

bool RationalSeries::has_natural_counts() const {
  return std::ranges::all_of(counts(), [](const mpq_class& c) { return c.get_den() == 1 && sgn(c) >= 0; });
}

namespace {

void require_same_convention(const RationalSeries& a, const RationalSeries& b) {
  if (a.convention() != b.convention())
    fail(ErrorCode::ConventionMismatch, "cannot combine an " + std::string(to_string(a.convention())) +
                                            " with an " + std::string(to_string(b.convention())));
}

}  // namespace

RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
  require_same_convention(a, b);
  const int order = std::min(a.order(), b.order());
  std::vector<mpq_class> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
  return RationalSeries(a.convention(), std::move(c));
}

RationalSeries sub(const RationalSeries& a, const RationalSeries& b) {
  require_same_convention(a, b);
  const int order = std::min(a.order(), b.order());
  std::vector<mpq_class> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = a[i] - b[i];
  return RationalSeries(a.convention(), std::move(c));
}

RationalSeries scale(const RationalSeries& a, const mpq_class& factor) {
  std::vector<mpq_class> c = a.coefficients();
  for (auto& x : c) x *= factor;
  return RationalSeries(a.convention(), std::move(c));
}

RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
  require_same_convention(a, b);
  const int order = std::min(a.order(), b.order());
  std::vector<int> a_support;
  for (int i = 0; i <= order; ++i)
    if (sgn(a[i]) != 0) a_support.push_back(i);
  std::vector<mpq_class> c(static_cast<std::size_t>(order + 1));
  mpq_class term;
  for (int n = 0; n <= order; ++n) {
    mpq_class& acc = c[static_cast<std::size_t>(n)];
    for (int i : a_support) {
      if (i > n) break;
      if (sgn(b[n - i]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[n - i].get_mpq_t());
      acc += term;
    }
  }
  return RationalSeries(a.convention(), std::move(c));
}

RationalSeries div(const RationalSeries& a, const RationalSeries& b) {
  require_same_convention(a, b);
  if (sgn(b[0]) == 0) fail(ErrorCode::NotAUnit, "divisor has zero constant term");
  const int order = std::min(a.order(), b.order());
  std::vector<int> b_support;
  for (int i = 1; i <= order; ++i)
    if (sgn(b[i]) != 0) b_support.push_back(i);
  const mpq_class inverse_lead = 1 / b[0];
  std::vector<mpq_class> q(static_cast<std::size_t>(order + 1));
  mpq_class term;
  for (int n = 0; n <= order; ++n) {
    mpq_class acc = a[n];
    for (int i : b_support) {
      if (i > n) break;
      mpq_mul(term.get_mpq_t(), b[i].get_mpq_t(), q[static_cast<std::size_t>(n - i)].get_mpq_t());
      acc -= term;
    }
    q[static_cast<std::size_t>(n)] = acc * inverse_lead;
  }
  return RationalSeries(a.convention(), std::move(q));
}

namespace {

RationalSeries monomial(Convention convention, int degree, const mpq_class& value, int order) {
  RationalSeries s(convention, order);
  std::vector<mpq_class> c = s.coefficients();
  if (degree <= order) c[static_cast<std::size_t>(degree)] = value;
  return RationalSeries(convention, std::move(c));
}

RationalSeries exponential(Convention convention, int order) {
  if (convention == Convention::OGF) return series(SeriesName::OneOverOneMinusX, convention, order);
  std::vector<mpq_class> c(static_cast<std::size_t>(order + 1));
  mpz_class factorial = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) factorial *= static_cast<unsigned long>(n);
    c[static_cast<std::size_t>(n)] = mpq_class(1, factorial);
  }
  return RationalSeries(convention, std::move(c));
}

// ((2 - X)E - 2) / ((1 - X)E) in the given convention.
RationalSeries unbalanced_factor(Convention convention, int order) {
  const auto one = RationalSeries::constant(convention, 1, order);
  const auto two = RationalSeries::constant(convention, 2, order);
  const auto x = series(SeriesName::X, convention, order);
  const auto e = series(SeriesName::E, convention, order);
  return ((two - x) * e - two) / ((one - x) * e);
}

void require_convention(SeriesName name, Convention have, Convention want) {
  if (have != want)
    fail(ErrorCode::ConventionMismatch, "series " + std::string(to_string(name)) + " exists only as an " +
                                            std::string(to_string(want)));
}

}  // namespace

RationalSeries series(SeriesName name, Convention convention, int order) {
  if (order < 0) fail(ErrorCode::OutOfRange, "negative truncation order");
  switch (name) {
    case SeriesName::E: return exponential(convention, order);
    case SeriesName::X: return monomial(convention, 1, 1, order);
    case SeriesName::Egeq1: return exponential(convention, order) - RationalSeries::constant(convention, 1, order);
    case SeriesName::Egeq2:
      return exponential(convention, order) - RationalSeries::constant(convention, 1, order) -
             monomial(convention, 1, 1, order);
    case SeriesName::OneOverOneMinusX: {
      std::vector<mpq_class> c(static_cast<std::size_t>(order + 1), mpq_class(1));
      return RationalSeries(convention, std::move(c));
    }
    case SeriesName::Afactor: {
      require_convention(name, convention, Convention::EGF);
      // 2 - x - 2e^{-x} = x - sum_{m>=2} 2(-1)^m x^m / m!
      std::vector<mpq_class> numerator(static_cast<std::size_t>(order + 1));
      mpz_class factorial = 1;
      for (int m = 1; m <= order; ++m) {
        factorial *= static_cast<unsigned long>(m);
        numerator[static_cast<std::size_t>(m)] =
            m == 1 ? mpq_class(1) : mpq_class((m % 2 == 0 ? -2 : 2), factorial);
      }
      return RationalSeries(convention, std::move(numerator)) *
             series(SeriesName::OneOverOneMinusX, convention, order);
    }
    case SeriesName::UFactorLabeled:
      require_convention(name, convention, Convention::EGF);
      return unbalanced_factor(convention, order);
    case SeriesName::UFactorUnlabeled:
      require_convention(name, convention, Convention::OGF);
      return unbalanced_factor(convention, order);
  }
  fail(ErrorCode::OutOfRange, "unknown series name");
}

LabeledChain derive_labeled_chain(int order) {
  if (order < 0) fail(ErrorCode::OutOfRange, "negative truncation order");
  constexpr Convention egf = Convention::EGF;
  std::vector<mpz_class> bicolored_counts;
  for (int n = 0; n <= order; ++n) bicolored_counts.push_back(bicolored_labeled(n));

  const auto one = RationalSeries::constant(egf, 1, order);
  const auto x = series(SeriesName::X, egf, order);
  auto bc = RationalSeries::from_counts(egf, bicolored_counts);
  auto split = (one - x) * bc;
  auto unbalanced = series(SeriesName::Afactor, egf, order) * split;
  auto balanced = split - unbalanced;
  auto colored = bc / series(SeriesName::E, egf, order);
  auto k_canonical = series(SeriesName::Egeq2, egf, order) * colored;
  auto ambiguous = x * balanced;
  return LabeledChain{std::move(bc),       std::move(split),       std::move(unbalanced), std::move(balanced),
                      std::move(colored), std::move(k_canonical), std::move(ambiguous)};
}

UnlabeledChain derive_unlabeled_chain(int order, const std::vector<mpz_class>& split_counts) {
  if (order < 0) fail(ErrorCode::OutOfRange, "negative truncation order");
  if (static_cast<int>(split_counts.size()) < order + 1)
    fail(ErrorCode::InsufficientBase, "need unlabeled split counts up to n=" + std::to_string(order) + ", have " +
                                          std::to_string(split_counts.size()));
  constexpr Convention ogf = Convention::OGF;
  std::vector<mpz_class> base(split_counts.begin(), split_counts.begin() + order + 1);
  auto split = RationalSeries::from_counts(ogf, base);
  const auto geometric = series(SeriesName::OneOverOneMinusX, ogf, order);
  auto unbalanced = series(SeriesName::X, ogf, order) * geometric * split;
  auto bicolored = geometric * split;
  auto balanced = split - unbalanced;
  return UnlabeledChain{std::move(split), std::move(unbalanced), std::move(balanced), std::move(bicolored)};
}

}  // namespace splitspecies
