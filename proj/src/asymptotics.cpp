#include "splitspecies/asymptotics.hpp"

#include <cmath>

#include "splitspecies/counting.hpp"
#include "splitspecies/error.hpp"
#include "splitspecies/series.hpp"

namespace splitspecies {

BigFloat::BigFloat(int bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const mpz_class& value, int bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, int bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::scaled_by_power_of_two(long exponent) const {
  BigFloat out(bits());
  mpfr_mul_2si(out.value_, value_, exponent, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(bits());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

namespace {

std::string format(const char* pattern, int digits, mpfr_srcptr value) {
  char* text = nullptr;
  if (mpfr_asprintf(&text, pattern, digits, value) < 0 || text == nullptr) return "nan";
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

}  // namespace

std::string BigFloat::to_fixed(int digits) const { return format("%.*Rf", digits, value_); }
std::string BigFloat::to_scientific(int digits) const { return format("%.*Re", std::max(digits - 1, 0), value_); }

namespace {

template <class Op>
BigFloat combine(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat out(std::max(a.bits(), b.bits()));
  op(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return combine(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return combine(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return combine(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return combine(a, b, mpfr_div); }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

BigFloat c_constant(Parity parity, int bits) {
  if (bits < 64) fail(ErrorCode::OutOfRange, "c_constant needs at least 64 bits");
  // Both tails are below 4 * 2^{-(K+1)^2}.
  const int terms = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(bits) + 3.0)));
  const int working = bits + 32;
  BigFloat sum(working);
  BigFloat term(working);
  if (parity == Parity::Even) {
    // 1 + 2 sum_{k>=1} 2^{-k^2}
    for (int k = 1; k <= terms; ++k) {
      mpfr_set_ui_2exp(term.get(), 1, -static_cast<long>(k) * k + 1, MPFR_RNDN);
      sum = sum + term;
    }
    mpfr_add_ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  } else {
    // k and -k-1 pair up: 2^{-1/4} * 2 sum_{k>=0} 2^{-k(k+1)}
    for (int k = 0; k <= terms; ++k) {
      mpfr_set_ui_2exp(term.get(), 1, -static_cast<long>(k) * (k + 1) + 1, MPFR_RNDN);
      sum = sum + term;
    }
    BigFloat quarter_root(working);
    mpfr_set_si_2exp(quarter_root.get(), -1, -2, MPFR_RNDN);
    mpfr_exp2(quarter_root.get(), quarter_root.get(), MPFR_RNDN);
    sum = sum * quarter_root;
  }
  BigFloat out(bits);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

BigFloat asymptotic_bicolored(int n, int bits) {
  if (n < 1) fail(ErrorCode::OutOfRange, "asymptotic_bicolored needs n >= 1");
  const int working = bits + 32;
  mpz_class central;
  mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  const Parity parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  BigFloat value = c_constant(parity, working) * BigFloat(central, working);
  const long square = static_cast<long>(n) * n;
  value = value.scaled_by_power_of_two(square / 4);
  if (parity == Parity::Odd) {
    // n^2/4 = floor(n^2/4) + 1/4
    BigFloat quarter_root(working);
    mpfr_set_si_2exp(quarter_root.get(), 1, -2, MPFR_RNDN);
    mpfr_exp2(quarter_root.get(), quarter_root.get(), MPFR_RNDN);
    value = value * quarter_root;
  }
  BigFloat out(bits);
  mpfr_set(out.get(), value.get(), MPFR_RNDN);
  return out;
}

bool unbalanced_bound_holds(int n, const mpz_class& u, const mpz_class& s) {
  // u 2^{(n+1)/2} <= n^2 s, squared.
  mpz_class left = u * u;
  mpz_mul_2exp(left.get_mpz_t(), left.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  mpz_class n2 = static_cast<long>(n) * n;
  return left <= n2 * n2 * s * s;
}

namespace {

BigFloat ratio(const mpz_class& a, const mpz_class& b, int bits) { return BigFloat(mpq_class(a, b), bits); }

// Smallest N such that holds(n) for all n in [N, last]; `first` if it holds throughout.
template <class Pred>
int suffix_start(int first, int last, Pred holds) {
  int n = last;
  while (n >= first && holds(n)) --n;
  return n + 1;
}

struct LabeledCounts {
  std::vector<mpz_class> b, s, u;
};

LabeledCounts labeled_counts(int n_max) {
  LabeledCounts out;
  for (int n = 0; n <= n_max; ++n) out.b.push_back(bicolored_labeled(n));
  out.s.push_back(1);
  for (int n = 1; n <= n_max; ++n) out.s.push_back(out.b[n] - n * out.b[n - 1]);
  out.u = unbalanced_labeled_table(n_max);
  return out;
}

}  // namespace

RatioReport ratio_report(int n_max, const std::vector<mpz_class>& unlabeled_split, int bits) {
  if (n_max > 400) fail(ErrorCode::TooLarge, "ratio_report is limited to n <= 400");
  if (n_max < 1) fail(ErrorCode::OutOfRange, "ratio_report needs n_max >= 1");
  const LabeledCounts c = labeled_counts(n_max);
  RatioReport report;
  for (int n = 1; n <= n_max; ++n) {
    RatioRow row;
    row.n = n;
    row.b_ratio = BigFloat(c.b[n], bits) / asymptotic_bicolored(n, bits);
    row.s_over_b = ratio(c.s[n], c.b[n], bits);
    row.u_over_s = ratio(c.u[n], c.s[n], bits);
    BigFloat root(bits);
    mpfr_set_si_2exp(root.get(), n + 1, -1, MPFR_RNDN);
    mpfr_exp2(root.get(), root.get(), MPFR_RNDN);
    row.bound = BigFloat(mpz_class(static_cast<long>(n) * n), bits) / root;
    report.rows.push_back(std::move(row));
  }

  report.bound_threshold = suffix_start(1, n_max, [&](int n) { return unbalanced_bound_holds(n, c.u[n], c.s[n]); });
  // u_{n-1}/s_{n-1} > u_n/s_n
  report.u_over_s_decreasing_from =
      suffix_start(2, n_max, [&](int n) { return c.u[n - 1] * c.s[n] > c.u[n] * c.s[n - 1]; }) - 1;
  // (n-1) b_{n-2}/b_{n-1} > n b_{n-1}/b_n
  report.s_gap_decreasing_from =
      suffix_start(3, n_max, [&](int n) { return (n - 1) * c.b[n - 2] * c.b[n] > n * c.b[n - 1] * c.b[n - 1]; }) - 1;

  if (unlabeled_split.size() >= 2) {
    const int order = static_cast<int>(unlabeled_split.size()) - 1;
    const UnlabeledChain chain = derive_unlabeled_chain(order, unlabeled_split);
    for (int n = 1; n <= std::min(order, n_max); ++n) {
      const mpz_class b = chain.bicolored[n].get_num();
      const mpz_class s = chain.split[n].get_num();
      const mpz_class u = chain.unbalanced[n].get_num();
      mpz_class factorial;
      mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
      report.unlabeled_rows.push_back(
          UnlabeledRatioRow{n, ratio(s, b, bits), ratio(u, s, bits), ratio(b * factorial, c.b[n], bits)});
    }
  }
  return report;
}

namespace {

InequalityCheck ratio_check(const std::vector<mpz_class>& a, int first, int last, bool divide_by_n) {
  InequalityCheck out;
  for (int n = first; n <= last; ++n) {
    mpz_class right = a[n - 1] * a[n - 1];
    mpz_mul_2exp(right.get_mpz_t(), right.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    mpz_class left = a[n] * a[n];
    if (divide_by_n) left *= static_cast<long>(n) * n;
    if (left < right) out.violations.push_back(n);
  }
  out.threshold = out.violations.empty() ? first : out.violations.back() + 1;
  return out;
}

}  // namespace

RatioInequalities check_b_ratio(int n_max, const std::vector<mpz_class>& unlabeled_split,
                                const std::vector<mpz_class>& unlabeled_bicolored) {
  if (n_max > 500) fail(ErrorCode::TooLarge, "check_b_ratio is limited to n <= 500");
  if (n_max < 2) fail(ErrorCode::OutOfRange, "check_b_ratio needs n_max >= 2");
  RatioInequalities out;
  out.n_max = n_max;
  std::vector<mpz_class> b, s;
  for (int n = 0; n <= n_max; ++n) b.push_back(bicolored_labeled(n));
  s.push_back(1);
  for (int n = 1; n <= n_max; ++n) s.push_back(b[n] - n * b[n - 1]);
  out.bicolored = ratio_check(b, 2, n_max, false);
  out.split = ratio_check(s, 2, n_max, false);

  if (unlabeled_split.size() >= 3) {
    const int order = static_cast<int>(unlabeled_split.size()) - 1;
    std::vector<mpz_class> bt;
    if (unlabeled_bicolored.empty()) {
      const UnlabeledChain chain = derive_unlabeled_chain(order, unlabeled_split);
      for (int n = 0; n <= order; ++n) bt.push_back(chain.bicolored[n].get_num());
    } else {
      if (unlabeled_bicolored.size() != unlabeled_split.size())
        fail(ErrorCode::LengthMismatch, "unlabeled split and bicolored counts differ in length");
      bt = unlabeled_bicolored;
    }
    out.unlabeled_bicolored = ratio_check(bt, 2, order, true);
    for (int n = 1; n <= order; ++n)
      if (unlabeled_split[static_cast<std::size_t>(n)] != bt[n] - bt[n - 1]) out.unlabeled_difference_identity = false;
  }
  return out;
}

}  // namespace splitspecies
