#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace noc {

/// Exact nonnegative/signed big integer used for every cardinality.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, used by the bound calculators.
using BigRat = boost::multiprecision::cpp_rational;

/// High-precision binary float (~168 fraction bits) for root finding and
/// growth-rate numerics. Never used on a cardinality path.
using Real = boost::multiprecision::cpp_bin_float_50;

using Symbol = std::uint32_t;

/// Default ceiling on q^n for exhaustive scans (overridable per call and,
/// in the CLI, via NOC_ENUM_CAP).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Thrown when an exhaustive scan would exceed its enumeration cap.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed code/profile files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

/// True iff q^len <= cap.
inline bool enumeration_feasible(unsigned q, unsigned len, std::uint64_t cap) {
  return pow_int(q, len) <= BigInt(cap);
}

}  // namespace noc
