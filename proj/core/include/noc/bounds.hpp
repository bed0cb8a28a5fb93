#pragma once

#include "noc/count.hpp"
#include "noc/types.hpp"

namespace noc {

/// An upper bound on a code size: the exact rational value, whether the
/// bound is strict, and the largest integer a code size can reach under it.
struct BoundValue {
  BigRat exact;
  BigInt integer_bound;
  bool strict;

  static BoundValue make(BigRat exact, bool strict);
};

/// ((n-1)/n)^{n-1} q^n / n. Attained when n divides q.
BoundValue levenshtein_bound(unsigned n, unsigned q);

/// q^n / (2n-1). Never attained (strict).
BoundValue chee_bound(unsigned n, unsigned q);

/// Upper bound on the number of length-n codewords extending the profiled
/// lower layers (lengths h..n-1; an empty profile means h = n):
///   q^n/(m+n) - (1/q^m) sum_{i=h..n-1} b(m+n-i) |J(i)|,  1 <= m < h.
/// The b values are recomputed from `lower` and never involve length n.
BoundValue recursive_bound(const CodeSizeProfile& lower, unsigned n, unsigned m);

struct RecursiveBoundMin {
  BoundValue bound;
  unsigned m;  // minimizing choice
};

/// Minimum of recursive_bound over 1 <= m < h; equals q^n/(2n-1) when the
/// profile is empty (h = n).
RecursiveBoundMin recursive_bound_min(const CodeSizeProfile& lower, unsigned n);

}  // namespace noc
