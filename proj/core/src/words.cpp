#include "noc/words.hpp"

#include <algorithm>
#include <sstream>

namespace noc {

Word Word::prefix(std::size_t len) const {
  if (len == 0 || len > size()) throw std::invalid_argument("prefix length out of range");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Word Word::suffix(std::size_t len) const {
  if (len == 0 || len > size()) throw std::invalid_argument("suffix length out of range");
  return Word(std::vector<Symbol>(symbols_.end() - static_cast<std::ptrdiff_t>(len), symbols_.end()));
}

Word Word::reversed() const {
  std::vector<Symbol> rev(symbols_.rbegin(), symbols_.rend());
  return Word(std::move(rev));
}

bool Word::fits(const Alphabet& a) const {
  return std::all_of(symbols_.begin(), symbols_.end(), [&](Symbol s) { return s < a.size(); });
}

std::string to_string(const Word& w) {
  const bool digits = std::all_of(w.symbols().begin(), w.symbols().end(), [](Symbol s) { return s < 10; });
  std::ostringstream os;
  bool first = true;
  for (Symbol s : w.symbols()) {
    if (!digits && !first) os << ',';
    os << s;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

Bipartition::Bipartition(Alphabet alphabet, std::vector<Symbol> i, std::vector<Symbol> j)
    : alphabet_(alphabet), i_(std::move(i)), j_(std::move(j)), is_i_(alphabet.size(), false) {
  for (Symbol s : i_) is_i_[s] = true;
}

Bipartition::Bipartition(Alphabet alphabet, const std::set<Symbol>& i_set)
    : Bipartition([&] {
        if (i_set.empty()) throw std::invalid_argument("bipartition class I must be nonempty");
        if (i_set.size() >= alphabet.size()) throw std::invalid_argument("bipartition class J must be nonempty");
        for (Symbol s : i_set)
          if (s >= alphabet.size()) throw std::invalid_argument("bipartition symbol out of alphabet range");
        std::vector<Symbol> i(i_set.begin(), i_set.end());
        std::vector<Symbol> j;
        for (Symbol s = 0; s < alphabet.size(); ++s)
          if (!i_set.count(s)) j.push_back(s);
        return Bipartition(alphabet, std::move(i), std::move(j));
      }()) {}

Bipartition Bipartition::from_sets(const std::set<Symbol>& i_set, const std::set<Symbol>& j_set) {
  if (i_set.empty() || j_set.empty()) throw std::invalid_argument("bipartition classes must be nonempty");
  const std::size_t q = i_set.size() + j_set.size();
  std::vector<bool> seen(q, false);
  for (const auto* cls : {&i_set, &j_set}) {
    for (Symbol s : *cls) {
      if (s >= q || seen[s]) throw std::invalid_argument("I and J must partition {0..q-1}");
      seen[s] = true;
    }
  }
  return Bipartition(Alphabet(static_cast<unsigned>(q)), i_set);
}

Bipartition Bipartition::canonical(Alphabet alphabet, std::size_t i_size) {
  if (i_size == 0 || i_size >= alphabet.size())
    throw std::invalid_argument("bipartition size must satisfy 1 <= |I| <= q-1");
  std::set<Symbol> i_set;
  for (Symbol s = 0; s < i_size; ++s) i_set.insert(s);
  return Bipartition(alphabet, i_set);
}

bool Code::insert(Word w) {
  if (w.size() < 2) throw std::invalid_argument("codewords must have length at least 2");
  if (!w.fits(alphabet_)) throw std::invalid_argument("codeword symbol out of alphabet range");
  return words_.insert(std::move(w)).second;
}

unsigned Code::min_length() const {
  if (words_.empty()) throw std::logic_error("empty code has no minimum length");
  std::size_t h = words_.begin()->size();
  for (const Word& w : words_) h = std::min(h, w.size());
  return static_cast<unsigned>(h);
}

unsigned Code::max_length() const {
  if (words_.empty()) throw std::logic_error("empty code has no maximum length");
  std::size_t n = words_.begin()->size();
  for (const Word& w : words_) n = std::max(n, w.size());
  return static_cast<unsigned>(n);
}

bool Code::fixed_length() const { return words_.empty() || min_length() == max_length(); }

std::map<unsigned, std::size_t> Code::length_profile() const {
  std::map<unsigned, std::size_t> profile;
  for (const Word& w : words_) ++profile[static_cast<unsigned>(w.size())];
  return profile;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() > 0 ? w.size() - 1 : 0);
  for (std::size_t len = 1; len + 1 <= w.size(); ++len) out.push_back(w.prefix(len));
  return out;
}

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() > 0 ? w.size() - 1 : 0);
  for (std::size_t len = 1; len + 1 <= w.size(); ++len) out.push_back(w.suffix(len));
  return out;
}

bool contains_subword(const Word& u, const Word& v) {
  if (v.size() > u.size()) return false;
  const auto us = u.symbols();
  const auto vs = v.symbols();
  for (std::size_t off = 0; off + vs.size() <= us.size(); ++off) {
    if (std::equal(vs.begin(), vs.end(), us.begin() + static_cast<std::ptrdiff_t>(off))) return true;
  }
  return false;
}

BigInt cyclic_occurrence_count(const Word& u, const Word& v) {
  if (v.size() > u.size())
    throw std::invalid_argument("cyclic occurrence count requires |v| <= |u|");
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  BigInt count = 0;
  for (std::size_t p = 0; p < n; ++p) {
    bool match = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (u[(p + i) % n] != v[i]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

}  // namespace noc
