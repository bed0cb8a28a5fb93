#include "noc/count.hpp"

#include <algorithm>
#include <vector>

namespace noc {

namespace {

void check_class_sizes(unsigned i_size, unsigned j_size) {
  if (i_size == 0 || j_size == 0) throw std::invalid_argument("class sizes must be at least 1");
}

}  // namespace

BigInt u_count(unsigned i_size, unsigned j_size, unsigned k, long long n) {
  check_class_sizes(i_size, j_size);
  if (k < 1) throw std::invalid_argument("u_count requires k >= 1");
  if (n <= 0) return 0;
  const BigInt q = BigInt(i_size) + j_size;
  const BigInt drop = pow_int(i_size, k) * j_size;  // coefficient of the n-k-1 term
  std::vector<BigInt> u(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (long long m = 1; m <= n; ++m) {
    if (m <= 2) {
      u[static_cast<std::size_t>(m)] = pow_int(j_size, static_cast<unsigned>(m));
    } else {
      BigInt val = q * u[static_cast<std::size_t>(m - 1)];
      const long long back = m - static_cast<long long>(k) - 1;
      if (back > 0) val -= drop * u[static_cast<std::size_t>(back)];
      u[static_cast<std::size_t>(m)] = std::move(val);
    }
  }
  return u[static_cast<std::size_t>(n)];
}

RationalSeries u_gf(unsigned i_size, unsigned j_size, unsigned k) {
  check_class_sizes(i_size, j_size);
  if (k < 1) throw std::invalid_argument("u_gf requires k >= 1");
  const BigInt q = BigInt(i_size) + j_size;
  // |J|x(1 - |I|x)
  IntPolynomial num = IntPolynomial::monomial(j_size, 1) - IntPolynomial::monomial(BigInt(j_size) * i_size, 2);
  // 1 - qx + |I|^k |J| x^{k+1}
  IntPolynomial den = IntPolynomial{1} - IntPolynomial::monomial(q, 1) +
                      IntPolynomial::monomial(pow_int(i_size, k) * j_size, k + 1);
  return RationalSeries(std::move(num), std::move(den));
}

BigInt s_count(unsigned i_size, unsigned j_size, unsigned k, long long n) {
  check_class_sizes(i_size, j_size);
  if (k < 1) throw std::invalid_argument("s_count requires k >= 1");
  if (n <= static_cast<long long>(k)) return 0;
  const BigInt q = BigInt(i_size) + j_size;
  const BigInt drop = pow_int(i_size, k) * j_size;
  std::vector<BigInt> s(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (long long m = k + 1; m <= n; ++m) {
    if (m <= static_cast<long long>(k) + 2) {
      s[static_cast<std::size_t>(m)] = pow_int(i_size, k) * pow_int(j_size, static_cast<unsigned>(m - k));
    } else {
      BigInt val = q * s[static_cast<std::size_t>(m - 1)];
      const long long back = m - static_cast<long long>(k) - 1;
      if (back > 0) val -= drop * s[static_cast<std::size_t>(back)];
      s[static_cast<std::size_t>(m)] = std::move(val);
    }
  }
  return s[static_cast<std::size_t>(n)];
}

RationalSeries s_gf(unsigned i_size, unsigned j_size, unsigned k) {
  check_class_sizes(i_size, j_size);
  if (k < 1) throw std::invalid_argument("s_gf requires k >= 1");
  const BigInt q = BigInt(i_size) + j_size;
  const BigInt lead = pow_int(i_size, k) * j_size;
  // |I|^k |J| x^{k+1} (1 - |I|x)
  IntPolynomial num =
      IntPolynomial::monomial(lead, k + 1) - IntPolynomial::monomial(lead * i_size, k + 2);
  IntPolynomial den =
      IntPolynomial{1} - IntPolynomial::monomial(q, 1) + IntPolynomial::monomial(lead, k + 1);
  return RationalSeries(std::move(num), std::move(den));
}

BigInt r_count(unsigned i_size, unsigned j_size, unsigned k, long long n) {
  check_class_sizes(i_size, j_size);
  if (k < 2) throw std::invalid_argument("r_count requires k >= 2");
  if (n < 0 || n == 1) return 0;
  if (n == 0) return 1;
  const BigInt q = BigInt(i_size) + j_size;
  const BigInt mid = pow_int(i_size, k) * j_size + BigInt(i_size) * pow_int(j_size, k);
  const BigInt tail = pow_int(i_size, k) * pow_int(j_size, k);
  std::vector<BigInt> r(static_cast<std::size_t>(n) + 1, BigInt(0));
  r[0] = 1;
  if (n >= 2) r[2] = BigInt(i_size) * j_size;
  for (long long m = 3; m <= n; ++m) {
    BigInt val = q * r[static_cast<std::size_t>(m - 1)];
    const long long b1 = m - static_cast<long long>(k) - 1;
    if (b1 >= 0) val -= mid * r[static_cast<std::size_t>(b1)];
    const long long b2 = m - 2 * static_cast<long long>(k);
    if (b2 >= 0) val += tail * r[static_cast<std::size_t>(b2)];
    r[static_cast<std::size_t>(m)] = std::move(val);
  }
  return r[static_cast<std::size_t>(n)];
}

RationalSeries r_gf(unsigned i_size, unsigned j_size, unsigned k) {
  check_class_sizes(i_size, j_size);
  if (k < 2) throw std::invalid_argument("r_gf requires k >= 2");
  const BigInt q = BigInt(i_size) + j_size;
  IntPolynomial num = IntPolynomial{1} - IntPolynomial::monomial(q, 1) +
                      IntPolynomial::monomial(BigInt(i_size) * j_size, 2);
  IntPolynomial den =
      IntPolynomial{1} - IntPolynomial::monomial(q, 1) +
      IntPolynomial::monomial(pow_int(i_size, k) * j_size + BigInt(i_size) * pow_int(j_size, k), k + 1) -
      IntPolynomial::monomial(pow_int(i_size, k) * pow_int(j_size, k), 2 * k);
  return RationalSeries(std::move(num), std::move(den));
}

bool d_k_identity_check(unsigned k, unsigned n_max) {
  if (k < 3) throw std::invalid_argument("d_k_identity_check requires k >= 3");
  for (unsigned n = 2; n <= n_max; ++n) {
    BigInt rhs = 0;
    for (unsigned j = 1; j <= k - 1; ++j)
      rhs += r_count(1, 1, k, static_cast<long long>(n) - static_cast<long long>(j));
    if (n % k == 0)
      rhs += 1;
    else if (n % k == 1)
      rhs -= 1;
    if (r_count(1, 1, k, n) != rhs) return false;
  }
  return true;
}

BigInt v_count(unsigned i_size, unsigned j_size, unsigned k, unsigned len) {
  check_class_sizes(i_size, j_size);
  if (k < 3) throw std::invalid_argument("v_count requires k >= 3");
  if (len < 2 * k + 2) throw std::invalid_argument("v_count requires len >= 2k+2");
  return pow_int(i_size, k) * pow_int(j_size, k) * r_count(i_size, j_size, k, len - 2 * k);
}

BigInt vcal_count(unsigned i_size, unsigned j_size, unsigned k, unsigned n) {
  check_class_sizes(i_size, j_size);
  if (k < 3) throw std::invalid_argument("vcal_count requires k >= 3");
  if (n < 2 * k + 2) throw std::invalid_argument("vcal_count requires n >= 2k+2");
  BigInt total = 0;
  for (unsigned i = 2 * k + 2; i <= n; ++i) total += v_count(i_size, j_size, k, i);
  return total;
}

RationalSeries vcal_gf(unsigned i_size, unsigned j_size, unsigned k) {
  check_class_sizes(i_size, j_size);
  if (k < 3) throw std::invalid_argument("vcal_gf requires k >= 3");
  const RationalSeries r = r_gf(i_size, j_size, k);
  const BigInt lead = pow_int(i_size, k) * pow_int(j_size, k);
  // lead * x^{2k} (r_num - r_den) / ((1 - x) r_den)
  IntPolynomial num = IntPolynomial::monomial(lead, 2 * k) * (r.num() - r.den());
  IntPolynomial den = (IntPolynomial{1} - IntPolynomial::monomial(1, 1)) * r.den();
  return RationalSeries(std::move(num), std::move(den));
}

CodeSizeProfile CodeSizeProfile::of(const Code& code) {
  CodeSizeProfile profile;
  profile.q = code.alphabet().size();
  for (const auto& [len, cnt] : code.length_profile()) profile.sizes[len] = cnt;
  return profile;
}

unsigned CodeSizeProfile::min_length() const {
  if (sizes.empty()) throw std::logic_error("empty profile has no minimum length");
  return sizes.begin()->first;
}

unsigned CodeSizeProfile::max_length() const {
  if (sizes.empty()) throw std::logic_error("empty profile has no maximum length");
  return sizes.rbegin()->first;
}

namespace {

void check_profile(const CodeSizeProfile& profile) {
  if (profile.q < 2) throw std::invalid_argument("profile alphabet size must be at least 2");
  for (const auto& [len, cnt] : profile.sizes) {
    if (len < 2) throw std::invalid_argument("profile lengths must be at least 2");
    if (cnt < 0) throw std::invalid_argument("profile sizes must be nonnegative");
  }
}

}  // namespace

BigInt b_count_recurrence(const CodeSizeProfile& profile, long long m) {
  check_profile(profile);
  if (m < 0) return 0;
  const unsigned h = profile.empty() ? 0 : profile.min_length();
  std::vector<BigInt> b(static_cast<std::size_t>(m) + 1);
  for (long long i = 0; i <= m; ++i) {
    if (profile.empty() || i < static_cast<long long>(h)) {
      b[static_cast<std::size_t>(i)] = pow_int(profile.q, static_cast<unsigned>(i));
      continue;
    }
    BigInt val = BigInt(profile.q) * b[static_cast<std::size_t>(i - 1)];
    for (const auto& [len, cnt] : profile.sizes) {
      if (static_cast<long long>(len) > i) break;
      val -= b[static_cast<std::size_t>(i - len)] * cnt;
    }
    b[static_cast<std::size_t>(i)] = std::move(val);
  }
  return b[static_cast<std::size_t>(m)];
}

BigInt b_count_multinomial(const CodeSizeProfile& profile, unsigned m) {
  check_profile(profile);
  std::vector<std::pair<unsigned, BigInt>> layers(profile.sizes.begin(), profile.sizes.end());
  std::vector<BigInt> factorial(m + 1);
  factorial[0] = 1;
  for (unsigned i = 1; i <= m; ++i) factorial[i] = factorial[i - 1] * i;
  const BigInt q = profile.q;

  BigInt total = 0;
  // DFS over (t_h, .., t_n); carries prod_i |J(i)|^{t_i} / t_i! as an exact
  // rational split into numerator and factorial denominator.
  struct Frame {
    std::size_t layer;
    unsigned remaining;
    unsigned r;
    BigInt numerator;   // prod |J(i)|^{t_i}
    BigInt denominator; // prod t_i!
  };
  std::vector<Frame> stack;
  stack.push_back({0, m, 0, 1, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.layer == layers.size()) {
      const unsigned t1 = f.remaining;
      BigInt term = factorial[t1 + f.r] * pow_int(q, t1) * f.numerator;
      term /= factorial[t1] * f.denominator;
      total += (f.r % 2 == 1) ? -term : term;
      continue;
    }
    const auto& [len, size] = layers[f.layer];
    BigInt power = 1;
    for (unsigned t = 0; t * static_cast<unsigned long long>(len) <= f.remaining; ++t) {
      if (t > 0) {
        power *= size;
        if (power == 0) break;
      }
      stack.push_back({f.layer + 1, f.remaining - t * len, f.r + t, f.numerator * power,
                       f.denominator * factorial[t]});
    }
  }
  return total;
}

RationalSeries b_gf(const CodeSizeProfile& profile) {
  check_profile(profile);
  IntPolynomial den = IntPolynomial{1} - IntPolynomial::monomial(profile.q, 1);
  for (const auto& [len, cnt] : profile.sizes) den = den + IntPolynomial::monomial(cnt, len);
  return RationalSeries(IntPolynomial{1}, std::move(den));
}

namespace {

// p(y) = y^k - (y^{k-1} + .. + 1); strictly increasing on (1, 2).
Real root_poly(unsigned k, const Real& y) {
  Real p = pow(y, static_cast<int>(k));
  Real term = 1;
  for (unsigned i = 0; i < k; ++i) {
    p -= term;
    term *= y;
  }
  return p;
}

Real epsilon_by_root(unsigned k, Real* y0_out) {
  Real lo = 1, hi = 2;
  for (int iter = 0; iter < 220; ++iter) {
    const Real mid = (lo + hi) / 2;
    if (root_poly(k, mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  const Real y0 = (lo + hi) / 2;
  if (y0_out != nullptr) *y0_out = y0;
  return 1 - y0 / 2;
}

Real epsilon_by_series(unsigned k, const Real& tail_budget) {
  // Successive term ratios increase towards L = (k+1)^{k+1} / (k^k 2^{k+1}),
  // so the tail after a term t is below t*L/(1-L). Stop once that bound
  // fits the budget.
  const Real limit_ratio =
      Real(pow_int(k + 1, k + 1)) / (Real(pow_int(k, k)) * pow(Real(2), static_cast<int>(k + 1)));
  const Real term_floor = tail_budget * (1 - limit_ratio) / limit_ratio;

  Real sum = 0;
  // term_i = C((k+1)i - 2, i - 1) / (i * 2^{(k+1)i})
  for (unsigned i = 1;; ++i) {
    const unsigned top = (k + 1) * i - 2;
    const unsigned bottom = i - 1;
    BigInt binom = 1;
    for (unsigned j = 0; j < bottom; ++j) {
      binom *= top - j;
      binom /= j + 1;
    }
    Real term = Real(binom) / (Real(i) * pow(Real(2), static_cast<int>((k + 1) * i)));
    sum += term;
    if (term < term_floor && term < tail_budget) break;
    if (i > 100000) throw std::logic_error("epsilon series failed to converge");
  }
  return sum;
}

}  // namespace

EpsilonResult epsilon_k(unsigned k, const Real& tolerance) {
  if (k < 2) throw std::invalid_argument("epsilon_k requires k >= 2");
  if (tolerance <= 0) throw std::invalid_argument("epsilon_k requires a positive tolerance");
  Real y0 = 0;
  const Real by_root = epsilon_by_root(k, &y0);
  const Real by_series = epsilon_by_series(k, tolerance / 4);
  if (abs(by_root - by_series) > tolerance)
    throw std::logic_error("epsilon_k routes disagree beyond tolerance");
  return EpsilonResult{k, by_root, y0};
}

Real growth_rate(unsigned q, unsigned k, GrowthFamily family) {
  if (q < 2 || q % 2 != 0)
    throw std::invalid_argument("growth_rate is defined for even q >= 2 only");
  unsigned eps_index = 0;
  switch (family) {
    case GrowthFamily::kFixed:
      if (k <= 1) throw std::invalid_argument("fixed-length growth rate requires k > 1");
      eps_index = k;
      break;
    case GrowthFamily::kVariable:
      if (k < 3) throw std::invalid_argument("variable-length growth rate requires k >= 3");
      eps_index = k - 1;
      break;
  }
  return Real(q) * (1 - epsilon_k(eps_index).epsilon);
}

}  // namespace noc
