#include "noc/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace noc {

namespace {

BigInt floor_rat(const BigRat& x) {
  BigInt quotient = numerator(x) / denominator(x);
  if (quotient * denominator(x) != numerator(x) && x < 0) --quotient;
  return quotient;
}

bool is_integral(const BigRat& x) { return denominator(x) == 1; }

}  // namespace

BoundValue BoundValue::make(BigRat exact, bool strict) {
  BigInt bound = floor_rat(exact);
  if (strict && is_integral(exact)) --bound;
  return BoundValue{std::move(exact), std::move(bound), strict};
}

BoundValue levenshtein_bound(unsigned n, unsigned q) {
  if (n < 2 || q < 2) throw std::invalid_argument("bound requires n, q >= 2");
  BigRat exact(pow_int(n - 1, n - 1) * pow_int(q, n), pow_int(n, n));
  return BoundValue::make(std::move(exact), /*strict=*/false);
}

BoundValue chee_bound(unsigned n, unsigned q) {
  if (n < 2 || q < 2) throw std::invalid_argument("bound requires n, q >= 2");
  BigRat exact(pow_int(q, n), BigInt(2) * n - 1);
  return BoundValue::make(std::move(exact), /*strict=*/true);
}

BoundValue recursive_bound(const CodeSizeProfile& lower, unsigned n, unsigned m) {
  if (lower.q < 2) throw std::invalid_argument("profile alphabet size must be at least 2");
  const unsigned h = lower.empty() ? n : lower.min_length();
  if (!lower.empty() && lower.max_length() >= n)
    throw std::invalid_argument("profile must cover lengths below n only");
  if (m < 1 || m >= h) throw std::invalid_argument("recursive bound requires 1 <= m < h");

  BigRat exact(pow_int(lower.q, n), BigInt(m) + n);
  BigInt weighted = 0;
  for (const auto& [len, cnt] : lower.sizes)
    weighted += b_count_recurrence(lower, static_cast<long long>(m) + n - len) * cnt;
  exact -= BigRat(weighted, pow_int(lower.q, m));
  return BoundValue::make(std::move(exact), /*strict=*/true);
}

RecursiveBoundMin recursive_bound_min(const CodeSizeProfile& lower, unsigned n) {
  const unsigned h = lower.empty() ? n : lower.min_length();
  if (h < 2) throw std::invalid_argument("recursive bound minimum requires h >= 2");
  RecursiveBoundMin best{recursive_bound(lower, n, 1), 1};
  for (unsigned m = 2; m < h; ++m) {
    BoundValue candidate = recursive_bound(lower, n, m);
    if (candidate.exact < best.bound.exact) best = RecursiveBoundMin{std::move(candidate), m};
  }
  return best;
}

}  // namespace noc
