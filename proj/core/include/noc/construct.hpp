#pragma once

#include <set>
#include <vector>

#include "noc/words.hpp"

namespace noc {

/// A set of forbidden length-k blocks; a word is free of it when no
/// length-k window of the word is one of the blocks.
struct ForbiddenSet {
  unsigned k = 0;
  std::set<Word> blocks;

  ForbiddenSet(unsigned block_length, std::set<Word> block_set);
  /// All k-tuples over the given symbols, e.g. I^k.
  static ForbiddenSet power(const std::vector<Symbol>& symbols, unsigned k);
};

/// True iff |w| < k or no length-k window of w lies in f.blocks.
bool is_free(const Word& w, const ForbiddenSet& f);

/// Expands a binary word: position i ranges over I when the bit is 0 and
/// over J when it is 1. Result is sorted; size |I|^{#0} |J|^{#1}.
std::vector<Word> phi_expand(const Word& binary_word, const Bipartition& bp);

/// Union of phi_expand over a binary code.
Code phi_code(const Code& binary_code, const Bipartition& bp);

/// Fixed length n over Z_q: k leading zeros, s_{k+1} != 0, s_n != 0, and the
/// tail free of k consecutive zeros. Requires n, q >= 2 and 1 <= k <= n-1.
Code construction_i(unsigned n, Alphabet alphabet, unsigned k);

/// Fixed length n: prefix in C (subset of I^k), s_{k+1} in J, s_n in J, tail
/// C-free. General C; size available only by enumeration.
Code construction_ia(unsigned n, const Bipartition& bp, const ForbiddenSet& c);

/// Fixed length n: prefix in I^k, s_{k+1} in J, s_n in J, tail I^k-free.
Code construction_i_prime(unsigned n, const Bipartition& bp, unsigned k);

/// Binary variable-length code: union over lengths i = 2k+2..n of the words
/// 1^k m 0^k where m starts with 0, ends with 1, and has no k equal
/// consecutive bits. Requires k >= 3 and n >= 2k+2.
Code construction_ii(unsigned n, unsigned k);

/// q-ary variable-length code: union over lengths i = 2k+2..n of
/// J^k x R x I^k, R the (I^k u J^k)-free words starting in I and ending in J.
Code construction_ii_prime(unsigned n, const Bipartition& bp, unsigned k);

}  // namespace noc
