#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "noc/code_io.hpp"
#include "noc/words.hpp"

namespace noc::test {

inline Word make_word(const std::string& digits, unsigned q = 10) {
  return parse_word(digits, Alphabet(q));
}

inline Code make_code(unsigned q, std::initializer_list<std::string> words) {
  Code code{Alphabet(q)};
  for (const std::string& w : words) code.insert(parse_word(w, Alphabet(q)));
  return code;
}

/// Deterministic random words for property-style checks.
class WordGen {
 public:
  explicit WordGen(std::uint32_t seed = 20240801u) : rng_(seed) {}

  Word word(unsigned q, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<Symbol> sym_dist(0, q - 1);
    std::vector<Symbol> symbols(len_dist(rng_));
    for (Symbol& s : symbols) s = sym_dist(rng_);
    return Word(std::move(symbols));
  }

 private:
  std::mt19937 rng_;
};

/// All words over Z_q^len in lexicographic order (test-scale only).
inline std::vector<Word> all_words(unsigned q, unsigned len) {
  std::vector<Word> out;
  std::vector<Symbol> w(len, 0);
  while (true) {
    out.push_back(Word(w));
    std::size_t i = len;
    while (i > 0) {
      if (++w[i - 1] < q) break;
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace noc::test
