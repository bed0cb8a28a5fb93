#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "noc/types.hpp"

namespace noc {

/// The alphabet Z_q = {0, .., q-1}, q >= 2.
class Alphabet {
 public:
  explicit Alphabet(unsigned q) : q_(q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  }
  unsigned size() const { return q_; }
  bool operator==(const Alphabet&) const = default;

 private:
  unsigned q_;
};

/// A nonempty sequence of symbols. Symbol range against a concrete alphabet
/// is enforced where an alphabet is known (parsers, Code, enumeration).
class Word {
 public:
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("word must be nonempty");
  }
  Word(std::initializer_list<Symbol> symbols) : Word(std::vector<Symbol>(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  /// The first `len` symbols, 1 <= len <= size().
  Word prefix(std::size_t len) const;
  /// The last `len` symbols, 1 <= len <= size().
  Word suffix(std::size_t len) const;
  Word reversed() const;

  bool fits(const Alphabet& a) const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Digit string for q <= 10 style alphabets, comma-separated otherwise.
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// An ordered split of Z_q into two disjoint nonempty classes I and J.
class Bipartition {
 public:
  Bipartition(Alphabet alphabet, const std::set<Symbol>& i_set);
  /// Builds the partition from both classes; q is |I| + |J|.
  static Bipartition from_sets(const std::set<Symbol>& i_set, const std::set<Symbol>& j_set);
  /// I = {0, .., i_size-1}, J = the rest.
  static Bipartition canonical(Alphabet alphabet, std::size_t i_size);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Symbol>& i_symbols() const { return i_; }
  const std::vector<Symbol>& j_symbols() const { return j_; }
  std::size_t i_size() const { return i_.size(); }
  std::size_t j_size() const { return j_.size(); }
  bool in_i(Symbol s) const { return is_i_[s]; }
  bool in_j(Symbol s) const { return !is_i_[s]; }

 private:
  Bipartition(Alphabet alphabet, std::vector<Symbol> i, std::vector<Symbol> j);
  Alphabet alphabet_;
  std::vector<Symbol> i_, j_;
  std::vector<bool> is_i_;
};

/// A finite set of words over one alphabet, kept lexicographically sorted.
/// Words of length 1 are rejected: every code lives in U_{n>=2} Z_q^n.
class Code {
 public:
  explicit Code(Alphabet alphabet) : alphabet_(alphabet) {}

  const Alphabet& alphabet() const { return alphabet_; }
  /// Returns false if the word was already present.
  bool insert(Word w);
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::set<Word>& words() const { return words_; }

  unsigned min_length() const;  // h
  unsigned max_length() const;  // n
  bool fixed_length() const;    // h == n (true for the empty code)
  /// length -> number of codewords of that length.
  std::map<unsigned, std::size_t> length_profile() const;

 private:
  Alphabet alphabet_;
  std::set<Word> words_;
};

/// All proper nonempty prefixes, lengths 1..n-1 (empty for length-1 words).
std::vector<Word> prefixes(const Word& w);
/// All proper nonempty suffixes, lengths 1..n-1 (empty for length-1 words).
std::vector<Word> suffixes(const Word& w);

/// True iff v occurs as a contiguous block of u (u == v counts).
bool contains_subword(const Word& u, const Word& v);

/// Number of start positions 0..|u|-1 at which v occurs reading u cyclically.
/// Requires |v| <= |u|.
BigInt cyclic_occurrence_count(const Word& u, const Word& v);

}  // namespace noc
