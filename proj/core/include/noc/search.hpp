#pragma once

#include <cstdint>
#include <limits>

#include "noc/types.hpp"
#include "noc/words.hpp"

namespace noc {

/// Outcome of the exhaustive maximum-code search. When `complete` is false
/// the node limit was hit and max_size is only a lower bound.
struct SearchResult {
  unsigned n;
  unsigned q;
  std::size_t max_size;
  Code witness;
  std::uint64_t nodes_explored;
  bool complete;
};

/// Exact maximum fixed-length non-overlapping code over Z_q^n, by
/// branch-and-bound maximum clique on the pairwise-compatibility graph of
/// the self-compatible words. Deterministic: branching order is degree
/// descending with lexicographic ties, and the limit counts explored nodes
/// rather than wall clock.
SearchResult max_code_exhaustive(unsigned n, Alphabet alphabet,
                                 std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max(),
                                 std::uint64_t enum_cap = kDefaultEnumerationCap);

/// Adds words in lexicographic order until the code is non-expandable.
/// The input must be a non-overlapping code of fixed length n (possibly
/// empty, in which case n fixes the length).
Code greedy_expand(const Code& code, unsigned n, std::uint64_t enum_cap = kDefaultEnumerationCap);

}  // namespace noc
