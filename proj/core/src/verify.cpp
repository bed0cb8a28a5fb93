#include "noc/verify.hpp"

#include <algorithm>
#include <vector>

namespace noc {

namespace {

// Shortest shared length first, so witnesses are minimal for the pair.
std::optional<Word> shared_prefix_suffix(const Word& u, const Word& v) {
  const std::size_t max_len = std::min(u.size(), v.size()) - 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto us = u.symbols();
    const auto vs = v.symbols();
    if (std::equal(us.begin(), us.begin() + static_cast<std::ptrdiff_t>(len),
                   vs.end() - static_cast<std::ptrdiff_t>(len)))
      return u.prefix(len);
  }
  return std::nullopt;
}

bool words_compatible(const Word& a, const Word& b) {
  if (shared_prefix_suffix(a, b) || shared_prefix_suffix(b, a)) return false;
  if (a != b) {
    if (a.size() < b.size() && contains_subword(b, a)) return false;
    if (b.size() < a.size() && contains_subword(a, b)) return false;
  }
  return true;
}

// Lexicographic odometer over Z_q^len; returns false after the last word.
bool next_word(std::vector<Symbol>& w, unsigned q) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (++w[i] < q) return true;
    w[i] = 0;
  }
  return false;
}

void check_cap(const Code& code, unsigned len, std::uint64_t enum_cap, const char* what) {
  if (!enumeration_feasible(code.alphabet().size(), len, enum_cap))
    throw EnumerationCapError(std::string(what) + ": q^len exceeds the enumeration cap");
}

}  // namespace

std::optional<OverlapWitness> find_overlap(const Code& code) {
  const auto& words = code.words();
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (auto shared = shared_prefix_suffix(u, v))
        return OverlapWitness{OverlapWitness::Kind::kPrefixSuffix, u, v, *shared};
    }
  }
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u != v && v.size() < u.size() && contains_subword(u, v))
        return OverlapWitness{OverlapWitness::Kind::kSubword, u, v, v};
    }
  }
  return std::nullopt;
}

ExpandabilityResult is_non_expandable(const Code& code, std::uint64_t enum_cap) {
  if (!code.fixed_length())
    throw std::invalid_argument("expandability is defined for fixed-length codes only");
  if (code.empty())
    throw std::invalid_argument("expandability check needs a nonempty code to fix the length");
  if (find_overlap(code).has_value())
    throw std::invalid_argument("expandability check requires a non-overlapping code");

  const unsigned n = code.max_length();
  const unsigned q = code.alphabet().size();
  check_cap(code, n, enum_cap, "is_non_expandable");

  std::vector<Symbol> symbols(n, 0);
  do {
    Word x(symbols);
    if (code.contains(x)) continue;
    if (shared_prefix_suffix(x, x)) continue;
    bool compatible = true;
    for (const Word& u : code.words()) {
      if (!words_compatible(x, u)) {
        compatible = false;
        break;
      }
    }
    if (compatible) return ExpandabilityResult{false, x};
  } while (next_word(symbols, q));
  return ExpandabilityResult{true, std::nullopt};
}

BigInt avoiding_count_bruteforce(const Code& code, unsigned m, std::uint64_t enum_cap) {
  check_cap(code, m, enum_cap, "avoiding_count_bruteforce");
  if (m == 0) return 1;
  const unsigned q = code.alphabet().size();

  // Group codewords by length for the suffix test at each position.
  std::vector<std::vector<Word>> by_length(m + 1);
  for (const Word& w : code.words())
    if (w.size() <= m) by_length[w.size()].push_back(w);

  // Depth-first scan of words whose prefixes avoid the code; a branch is
  // abandoned exactly when a codeword completes at the current position.
  BigInt count = 0;
  std::vector<Symbol> word(m);
  auto codeword_ends_at = [&](unsigned pos) {
    for (std::size_t len = 2; len <= pos + 1 && len <= m; ++len) {
      for (const Word& w : by_length[len]) {
        const auto ws = w.symbols();
        if (std::equal(ws.begin(), ws.end(), word.begin() + (pos + 1 - len))) return true;
      }
    }
    return false;
  };
  // Iterative DFS with explicit symbol counters.
  std::vector<Symbol> next_symbol(m, 0);
  unsigned depth = 0;
  while (true) {
    if (depth == m) {
      ++count;
      if (depth == 0) break;
      --depth;
      continue;
    }
    if (next_symbol[depth] >= q) {
      next_symbol[depth] = 0;
      if (depth == 0) break;
      --depth;
      continue;
    }
    word[depth] = next_symbol[depth]++;
    if (!codeword_ends_at(depth)) ++depth;
  }
  return count;
}

BigInt exactly_one_cyclic_count_bruteforce(const Code& code, unsigned length,
                                           std::uint64_t enum_cap) {
  check_cap(code, length, enum_cap, "exactly_one_cyclic_count_bruteforce");
  if (code.empty()) return 0;
  if (length < code.max_length())
    throw std::invalid_argument("length must cover the longest codeword");

  const unsigned q = code.alphabet().size();
  BigInt count = 0;
  std::vector<Symbol> symbols(length, 0);
  do {
    const Word w(symbols);
    BigInt occurrences = 0;
    for (const Word& v : code.words()) {
      occurrences += cyclic_occurrence_count(w, v);
      if (occurrences > 1) break;
    }
    if (occurrences == 1) ++count;
  } while (next_word(symbols, q));
  return count;
}

}  // namespace noc
