#pragma once

#include <optional>

#include "noc/types.hpp"
#include "noc/words.hpp"

namespace noc {

/// Certificate that a code is overlapping: either a shared proper
/// prefix/suffix between u and v, or a codeword v contained in a distinct
/// codeword u.
struct OverlapWitness {
  enum class Kind { kPrefixSuffix, kSubword };
  Kind kind;
  Word u;
  Word v;
  Word overlap;  // the shared prefix/suffix, or the contained codeword
};

/// First violation of the non-overlap conditions in deterministic scan
/// order, or nullopt when the code is non-overlapping (the empty code is).
std::optional<OverlapWitness> find_overlap(const Code& code);

inline bool is_non_overlapping(const Code& code) { return !find_overlap(code).has_value(); }

/// Outcome of the expandability scan: when expandable, `expansion` is the
/// lexicographically least word that keeps the code non-overlapping.
struct ExpandabilityResult {
  bool non_expandable;
  std::optional<Word> expansion;
};

/// Exhaustive scan over Z_q^n \ code. The code must be fixed-length and
/// non-overlapping; throws EnumerationCapError when q^n exceeds the cap.
ExpandabilityResult is_non_expandable(const Code& code,
                                      std::uint64_t enum_cap = kDefaultEnumerationCap);

/// |B(m)|: number of length-m words containing no codeword as a subword,
/// by exhaustive scan (m = 0 counts the empty word).
BigInt avoiding_count_bruteforce(const Code& code, unsigned m,
                                 std::uint64_t enum_cap = kDefaultEnumerationCap);

/// Number of length-L words whose total count of cyclic codeword
/// occurrences is exactly one. Requires L >= the maximum codeword length.
BigInt exactly_one_cyclic_count_bruteforce(const Code& code, unsigned length,
                                           std::uint64_t enum_cap = kDefaultEnumerationCap);

}  // namespace noc
