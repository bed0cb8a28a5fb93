#pragma once

#include <map>

#include "noc/series.hpp"
#include "noc/types.hpp"
#include "noc/words.hpp"

namespace noc {

// Cardinality formulas for the construction families. All counters are
// exact; i_size and j_size are the bipartition class sizes |I| and |J|.

/// |U^(k)(n)|: I^k-free words of length n starting and ending in J.
/// Defined as 0 for n <= 0.
BigInt u_count(unsigned i_size, unsigned j_size, unsigned k, long long n);
/// |J|x(1 - |I|x) / (1 - qx + |I|^k |J| x^{k+1}).
RationalSeries u_gf(unsigned i_size, unsigned j_size, unsigned k);

/// |S^(k)(n)|: size of the fixed-length code (k-run prefix construction).
BigInt s_count(unsigned i_size, unsigned j_size, unsigned k, long long n);
/// |I|^k |J| x^{k+1}(1 - |I|x) / (1 - qx + |I|^k |J| x^{k+1}).
RationalSeries s_gf(unsigned i_size, unsigned j_size, unsigned k);

/// r^(k)(n): (I^k u J^k)-free words of length n starting in I and ending
/// in J, with r(0) = 1 by convention. Requires k >= 2.
BigInt r_count(unsigned i_size, unsigned j_size, unsigned k, long long n);
/// (|I||J|x^2 - qx + 1) / (1 - qx + (|I|^k|J| + |I||J|^k)x^{k+1} - |I|^k|J|^k x^{2k}).
RationalSeries r_gf(unsigned i_size, unsigned j_size, unsigned k);

/// Checks, for binary classes (|I| = |J| = 1) and all 2 <= n <= n_max, that
/// r(n) = sum_{j=1..k-1} r(n-j) + d(n) with d = +1 when n % k == 0,
/// -1 when n % k == 1, else 0. Requires k >= 3.
bool d_k_identity_check(unsigned k, unsigned n_max);

/// |V^(k)(len)| = |I|^k |J|^k r(len - 2k). Requires k >= 3, len >= 2k+2.
BigInt v_count(unsigned i_size, unsigned j_size, unsigned k, unsigned len);

/// |Vcal^(k)(n)| = sum_{i=2k+2..n} |V^(k)(i)|. Requires k >= 3, n >= 2k+2.
BigInt vcal_count(unsigned i_size, unsigned j_size, unsigned k, unsigned n);
/// |I|^k|J|^k x^{2k}/(1-x) * (r_gf - 1); coefficient n is the cumulative size.
RationalSeries vcal_gf(unsigned i_size, unsigned j_size, unsigned k);

/// Length profile of a variable-length code: i -> number of codewords of
/// length i, for min length h to max length n. May be empty.
struct CodeSizeProfile {
  unsigned q = 0;
  std::map<unsigned, BigInt> sizes;

  static CodeSizeProfile of(const Code& code);

  bool empty() const { return sizes.empty(); }
  unsigned min_length() const;  // h
  unsigned max_length() const;  // n
};

// b(m): number of length-m words containing no codeword of the profiled
// code as a subword. Valid only when the profile comes from a
// non-overlapping code; callers assert that.

/// Linear recurrence route: b(m) = q^m for m < h,
/// b(m) = q b(m-1) - sum_i b(m-i)|J(i)| for m >= h; b(m) = 0 for m < 0.
BigInt b_count_recurrence(const CodeSizeProfile& profile, long long m);

/// Signed multinomial route:
/// sum (-1)^r (t_1+r)!/(t_1! t_h!..t_n!) q^{t_1} prod |J(i)|^{t_i}
/// over nonnegative t with t_1 + sum i*t_i = m, r = sum_{i>=h} t_i.
BigInt b_count_multinomial(const CodeSizeProfile& profile, unsigned m);

/// 1 / (1 - qx + sum_i |J(i)| x^i).
RationalSeries b_gf(const CodeSizeProfile& profile);

/// The defect eps_k = 1 - y0/2, where y0 in (1,2) is the positive real root
/// of y^k = y^{k-1} + .. + 1. Computed independently by root finding and by
/// the series sum_{i>=1} C((k+1)i-2, i-1) / (i 2^{(k+1)i}); the two routes
/// must agree within `tolerance` or the call throws.
struct EpsilonResult {
  unsigned k;
  Real epsilon;
  Real y0;
};
EpsilonResult epsilon_k(unsigned k, const Real& tolerance = Real("1e-12"));

enum class GrowthFamily { kFixed, kVariable };

/// Dominant growth rate of the balanced-bipartition families: q(1 - eps_k)
/// for the fixed-length family (k > 1), q(1 - eps_{k-1}) for the
/// variable-length family (k >= 3). Defined for even q only.
Real growth_rate(unsigned q, unsigned k, GrowthFamily family);

}  // namespace noc
