#include "noc/search.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "noc/verify.hpp"

namespace noc {

namespace {

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

bool fixed_length_compatible(const Word& a, const Word& b) {
  return !shared_prefix_suffix(a, b) && !shared_prefix_suffix(b, a);
}

bool next_word(std::vector<Symbol>& w, unsigned q) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (++w[i] < q) return true;
    w[i] = 0;
  }
  return false;
}

// Candidate words in lexicographic order: everything without a self
// prefix-suffix match (a word with one can never join any code).
std::vector<Word> candidate_words(unsigned n, unsigned q) {
  std::vector<Word> out;
  std::vector<Symbol> symbols(n, 0);
  do {
    Word w(symbols);
    if (!shared_prefix_suffix(w, w)) out.push_back(std::move(w));
  } while (next_word(symbols, q));
  return out;
}

using Bitset = std::vector<std::uint64_t>;

bool bit_test(const Bitset& bs, std::size_t i) { return (bs[i >> 6] >> (i & 63)) & 1u; }
void bit_set(Bitset& bs, std::size_t i) { bs[i >> 6] |= std::uint64_t{1} << (i & 63); }
void bit_clear(Bitset& bs, std::size_t i) { bs[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

bool bits_empty(const Bitset& bs) {
  return std::all_of(bs.begin(), bs.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset bits_and(const Bitset& a, const Bitset& b) {
  Bitset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

// Tomita-style maximum clique with a greedy-coloring bound.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adjacency, std::uint64_t node_limit)
      : adjacency_(std::move(adjacency)), node_limit_(node_limit), vertex_count_(adjacency_.size()) {}

  void run() {
    Bitset all((vertex_count_ + 63) / 64, 0);
    for (std::size_t v = 0; v < vertex_count_; ++v) bit_set(all, v);
    std::vector<std::size_t> current;
    expand(all, current);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool complete() const { return !aborted_; }

 private:
  // Sequential greedy coloring of the candidate set; emits the vertices in
  // color order together with their color numbers (1-based upper bounds).
  void color_sort(const Bitset& candidates, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& colors) const {
    order.clear();
    colors.clear();
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (!bits_empty(uncolored)) {
      ++color;
      Bitset admissible = uncolored;
      for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (!bit_test(admissible, v)) continue;
        order.push_back(v);
        colors.push_back(color);
        bit_clear(uncolored, v);
        // Remove v's neighbours from this color class.
        for (std::size_t w = 0; w < adjacency_[v].size(); ++w) admissible[w] &= ~adjacency_[v][w];
        bit_clear(admissible, v);
      }
    }
  }

  void expand(const Bitset& candidates, std::vector<std::size_t>& current) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (current.size() > best_.size()) best_ = current;

    std::vector<std::size_t> order, colors;
    color_sort(candidates, order, colors);

    Bitset remaining = candidates;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colors[idx] <= best_.size()) return;  // bound
      const std::size_t v = order[idx];
      bit_clear(remaining, v);
      current.push_back(v);
      expand(bits_and(remaining, adjacency_[v]), current);
      current.pop_back();
      if (aborted_) return;
    }
  }

  std::vector<Bitset> adjacency_;
  std::uint64_t node_limit_;
  std::size_t vertex_count_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult max_code_exhaustive(unsigned n, Alphabet alphabet, std::uint64_t node_limit,
                                 std::uint64_t enum_cap) {
  const unsigned q = alphabet.size();
  if (n < 2) throw std::invalid_argument("search requires n >= 2");
  if (!enumeration_feasible(q, n, enum_cap))
    throw EnumerationCapError("max_code_exhaustive: q^n exceeds the enumeration cap");

  const std::vector<Word> lex_candidates = candidate_words(n, q);
  const std::size_t count = lex_candidates.size();

  // Adjacency over lexicographic indices.
  std::vector<Bitset> adjacency(count, Bitset((count + 63) / 64, 0));
  std::vector<std::size_t> degree(count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (fixed_length_compatible(lex_candidates[a], lex_candidates[b])) {
        bit_set(adjacency[a], b);
        bit_set(adjacency[b], a);
        ++degree[a];
        ++degree[b];
      }
    }
  }

  // Branching order: degree descending, lexicographic ties.
  std::vector<std::size_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> rank(count);
  for (std::size_t i = 0; i < count; ++i) rank[perm[i]] = i;

  std::vector<Bitset> reordered(count, Bitset((count + 63) / 64, 0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (bit_test(adjacency[a], b)) bit_set(reordered[rank[a]], rank[b]);

  CliqueSearch search(std::move(reordered), node_limit);
  search.run();

  Code witness(alphabet);
  for (std::size_t v : search.best()) witness.insert(lex_candidates[perm[v]]);
  return SearchResult{n, q, search.best().size(), std::move(witness), search.nodes(), search.complete()};
}

Code greedy_expand(const Code& code, unsigned n, std::uint64_t enum_cap) {
  if (n < 2) throw std::invalid_argument("greedy_expand requires n >= 2");
  for (const Word& w : code.words())
    if (w.size() != n) throw std::invalid_argument("greedy_expand requires words of length n");
  if (find_overlap(code).has_value())
    throw std::invalid_argument("greedy_expand requires a non-overlapping code");
  const unsigned q = code.alphabet().size();
  if (!enumeration_feasible(q, n, enum_cap))
    throw EnumerationCapError("greedy_expand: q^n exceeds the enumeration cap");

  Code out = code;
  std::vector<Symbol> symbols(n, 0);
  do {
    Word x(symbols);
    if (out.contains(x) || shared_prefix_suffix(x, x)) continue;
    bool compatible = true;
    for (const Word& u : out.words()) {
      if (!fixed_length_compatible(x, u)) {
        compatible = false;
        break;
      }
    }
    if (compatible) out.insert(std::move(x));
  } while (next_word(symbols, q));
  return out;
}

}  // namespace noc
