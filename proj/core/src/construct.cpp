#include "noc/construct.hpp"

#include <algorithm>
#include <functional>

namespace noc {

ForbiddenSet::ForbiddenSet(unsigned block_length, std::set<Word> block_set)
    : k(block_length), blocks(std::move(block_set)) {
  if (k < 1) throw std::invalid_argument("forbidden block length must be at least 1");
  for (const Word& b : blocks)
    if (b.size() != k) throw std::invalid_argument("forbidden blocks must all have length k");
}

ForbiddenSet ForbiddenSet::power(const std::vector<Symbol>& symbols, unsigned k) {
  if (symbols.empty()) throw std::invalid_argument("cannot build blocks over an empty symbol set");
  std::set<Word> blocks;
  std::vector<Symbol> current(k);
  std::function<void(unsigned)> fill = [&](unsigned pos) {
    if (pos == k) {
      blocks.insert(Word(current));
      return;
    }
    for (Symbol s : symbols) {
      current[pos] = s;
      fill(pos + 1);
    }
  };
  fill(0);
  return ForbiddenSet(k, std::move(blocks));
}

bool is_free(const Word& w, const ForbiddenSet& f) {
  if (w.size() < f.k) return true;
  for (std::size_t off = 0; off + f.k <= w.size(); ++off) {
    Word window(std::vector<Symbol>(w.symbols().begin() + static_cast<std::ptrdiff_t>(off),
                                    w.symbols().begin() + static_cast<std::ptrdiff_t>(off + f.k)));
    if (f.blocks.count(window)) return false;
  }
  return true;
}

std::vector<Word> phi_expand(const Word& binary_word, const Bipartition& bp) {
  for (Symbol s : binary_word.symbols())
    if (s > 1) throw std::invalid_argument("phi_expand requires a binary word");
  std::vector<Word> out;
  std::vector<Symbol> current(binary_word.size());
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == binary_word.size()) {
      out.push_back(Word(current));
      return;
    }
    const auto& choices = binary_word[pos] == 0 ? bp.i_symbols() : bp.j_symbols();
    for (Symbol s : choices) {
      current[pos] = s;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

Code phi_code(const Code& binary_code, const Bipartition& bp) {
  if (binary_code.alphabet().size() != 2)
    throw std::invalid_argument("phi_code requires a binary code");
  Code out(bp.alphabet());
  for (const Word& w : binary_code.words())
    for (Word& image : phi_expand(w, bp)) out.insert(std::move(image));
  return out;
}

namespace {

// Enumerates, in lexicographic order, the tails of length `len` over Z_q with
// first and last symbol in J and every run of consecutive I-symbols shorter
// than k. Calls sink(tail) per tail.
void enumerate_i_run_free_tails(const Bipartition& bp, unsigned len, unsigned k,
                                const std::function<void(const std::vector<Symbol>&)>& sink) {
  const unsigned q = bp.alphabet().size();
  std::vector<Symbol> tail(len);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned pos, unsigned i_run) {
    if (pos == len) {
      sink(tail);
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      const bool in_i = bp.in_i(s);
      if (in_i && (pos == 0 || pos == len - 1)) continue;
      const unsigned run = in_i ? i_run + 1 : 0;
      if (run >= k) continue;
      tail[pos] = s;
      fill(pos + 1, run);
    }
  };
  fill(0, 0);
}

}  // namespace

Code construction_i(unsigned n, Alphabet alphabet, unsigned k) {
  const unsigned q = alphabet.size();
  if (n < 2) throw std::invalid_argument("construction I requires n >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("construction I requires 1 <= k <= n-1");
  Code out(alphabet);
  std::vector<Symbol> word(n, 0);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned pos, unsigned zero_run) {
    if (pos == n) {
      out.insert(Word(word));
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      if (s == 0 && (pos == k || pos == n - 1)) continue;  // s_{k+1} != 0, s_n != 0
      const unsigned run = s == 0 ? zero_run + 1 : 0;
      if (run >= k) continue;  // no k consecutive zeros within the tail
      word[pos] = s;
      fill(pos + 1, run);
    }
  };
  fill(k, 0);
  return out;
}

Code construction_ia(unsigned n, const Bipartition& bp, const ForbiddenSet& c) {
  const unsigned k = c.k;
  if (n < 2) throw std::invalid_argument("construction I.A requires n >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("construction I.A requires 1 <= k <= n-1");
  for (const Word& block : c.blocks)
    for (Symbol s : block.symbols())
      if (s >= bp.alphabet().size() || !bp.in_i(s))
        throw std::invalid_argument("construction I.A requires C to be a subset of I^k");

  Code out(bp.alphabet());
  if (c.blocks.empty()) return out;

  // Tails of length n-k: ends in J, C-free, checked window by window.
  const unsigned len = n - k;
  const unsigned q = bp.alphabet().size();
  std::vector<std::vector<Symbol>> tails;
  std::vector<Symbol> tail(len);
  std::function<void(unsigned)> fill = [&](unsigned pos) {
    if (pos == len) {
      tails.push_back(tail);
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      if ((pos == 0 || pos == len - 1) && !bp.in_j(s)) continue;
      tail[pos] = s;
      if (pos + 1 >= k) {
        Word window(std::vector<Symbol>(tail.begin() + (pos + 1 - k), tail.begin() + pos + 1));
        if (c.blocks.count(window)) continue;
      }
      fill(pos + 1);
    }
  };
  fill(0);

  for (const Word& block : c.blocks) {
    std::vector<Symbol> word(block.symbols().begin(), block.symbols().end());
    word.resize(n);
    for (const auto& t : tails) {
      std::copy(t.begin(), t.end(), word.begin() + k);
      out.insert(Word(word));
    }
  }
  return out;
}

Code construction_i_prime(unsigned n, const Bipartition& bp, unsigned k) {
  if (n < 2) throw std::invalid_argument("construction I' requires n >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("construction I' requires 1 <= k <= n-1");
  Code out(bp.alphabet());

  std::vector<std::vector<Symbol>> tails;
  enumerate_i_run_free_tails(bp, n - k, k,
                             [&](const std::vector<Symbol>& t) { tails.push_back(t); });

  // Prefixes range over I^k.
  std::vector<Symbol> word(n);
  std::function<void(unsigned)> fill_prefix = [&](unsigned pos) {
    if (pos == k) {
      for (const auto& t : tails) {
        std::copy(t.begin(), t.end(), word.begin() + k);
        out.insert(Word(word));
      }
      return;
    }
    for (Symbol s : bp.i_symbols()) {
      word[pos] = s;
      fill_prefix(pos + 1);
    }
  };
  fill_prefix(0);
  return out;
}

namespace {

void check_variable_params(unsigned n, unsigned k) {
  if (k < 3) throw std::invalid_argument("variable-length constructions require k >= 3");
  if (n < 2 * k + 2)
    throw std::invalid_argument("variable-length constructions require n >= 2k+2");
}

// Middles of length `len` with all runs of equal class shorter than k, first
// symbol in I, last symbol in J.
void enumerate_run_free_middles(const Bipartition& bp, unsigned len, unsigned k,
                                const std::function<void(const std::vector<Symbol>&)>& sink) {
  const unsigned q = bp.alphabet().size();
  std::vector<Symbol> mid(len);
  std::function<void(unsigned, bool, unsigned)> fill = [&](unsigned pos, bool prev_in_i, unsigned run) {
    if (pos == len) {
      sink(mid);
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      const bool in_i = bp.in_i(s);
      if (pos == 0 && !in_i) continue;
      if (pos == len - 1 && in_i) continue;
      const unsigned next_run = (pos > 0 && in_i == prev_in_i) ? run + 1 : 1;
      if (next_run >= k) continue;
      mid[pos] = s;
      fill(pos + 1, in_i, next_run);
    }
  };
  fill(0, false, 0);
}

}  // namespace

Code construction_ii(unsigned n, unsigned k) {
  check_variable_params(n, k);
  Code out(Alphabet(2));
  for (unsigned len = 2 * k + 2; len <= n; ++len) {
    const unsigned mid_len = len - 2 * k;
    std::vector<Symbol> word(len);
    std::fill(word.begin(), word.begin() + k, Symbol{1});
    std::fill(word.end() - k, word.end(), Symbol{0});
    std::vector<Symbol> mid(mid_len);
    std::function<void(unsigned, unsigned)> fill = [&](unsigned pos, unsigned run) {
      if (pos == mid_len) {
        std::copy(mid.begin(), mid.end(), word.begin() + k);
        out.insert(Word(word));
        return;
      }
      for (Symbol s = 0; s <= 1; ++s) {
        if (pos == 0 && s != 0) continue;
        if (pos == mid_len - 1 && s != 1) continue;
        const unsigned next_run = (pos > 0 && s == mid[pos - 1]) ? run + 1 : 1;
        if (next_run >= k) continue;
        mid[pos] = s;
        fill(pos + 1, next_run);
      }
    };
    fill(0, 0);
  }
  return out;
}

Code construction_ii_prime(unsigned n, const Bipartition& bp, unsigned k) {
  check_variable_params(n, k);
  Code out(bp.alphabet());
  for (unsigned len = 2 * k + 2; len <= n; ++len) {
    const unsigned mid_len = len - 2 * k;
    std::vector<std::vector<Symbol>> middles;
    enumerate_run_free_middles(bp, mid_len, k,
                               [&](const std::vector<Symbol>& m) { middles.push_back(m); });
    if (middles.empty()) continue;

    std::vector<Symbol> word(len);
    std::function<void(unsigned)> fill_prefix = [&](unsigned pos) {
      if (pos == k) {
        for (const auto& m : middles) {
          std::copy(m.begin(), m.end(), word.begin() + k);
          std::function<void(unsigned)> fill_suffix = [&](unsigned spos) {
            if (spos == len) {
              out.insert(Word(word));
              return;
            }
            for (Symbol s : bp.i_symbols()) {
              word[spos] = s;
              fill_suffix(spos + 1);
            }
          };
          fill_suffix(len - k);
        }
        return;
      }
      for (Symbol s : bp.j_symbols()) {
        word[pos] = s;
        fill_prefix(pos + 1);
      }
    };
    fill_prefix(0);
  }
  return out;
}

}  // namespace noc
