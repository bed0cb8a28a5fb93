#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "noc/bounds.hpp"
#include "noc/count.hpp"
#include "noc/search.hpp"
#include "noc/verify.hpp"

using namespace noc;
using test::make_code;
using test::make_word;

TEST_CASE("tiny instances") {
  const SearchResult r22 = max_code_exhaustive(2, Alphabet(2));
  CHECK(r22.max_size == 1);
  CHECK(r22.complete);

  const SearchResult r62 = max_code_exhaustive(6, Alphabet(2));
  CHECK(r62.max_size == 3);

  const SearchResult r33 = max_code_exhaustive(3, Alphabet(3));
  CHECK(r33.max_size == 4);
}

TEST_CASE("witness invariants") {
  for (const auto [n, q] : {std::pair<unsigned, unsigned>{5, 2}, {6, 2}, {3, 3}, {4, 3}}) {
    const SearchResult result = max_code_exhaustive(n, Alphabet(q));
    REQUIRE(result.complete);
    CHECK(result.witness.size() == result.max_size);
    CHECK(is_non_overlapping(result.witness));
    CHECK(is_non_expandable(result.witness).non_expandable);
  }
}

TEST_CASE("search result dominates the constructions and respects the bounds") {
  for (const auto [n, q] : {std::pair<unsigned, unsigned>{4, 2}, {6, 2}, {3, 3}, {4, 3}}) {
    const SearchResult result = max_code_exhaustive(n, Alphabet(q));
    BigInt best_construction = 0;
    for (unsigned k = 1; k < n; ++k)
      for (unsigned i_size = 1; i_size < q; ++i_size)
        best_construction = std::max(best_construction, s_count(i_size, q - i_size, k, n));
    CHECK(BigInt(result.max_size) >= best_construction);
    CHECK(BigInt(result.max_size) <= levenshtein_bound(n, q).integer_bound);
    CHECK(BigInt(result.max_size) <= chee_bound(n, q).integer_bound);
    CodeSizeProfile empty;
    empty.q = q;
    CHECK(BigInt(result.max_size) <= recursive_bound_min(empty, n).bound.integer_bound);
  }
}

TEST_CASE("search is deterministic") {
  const SearchResult a = max_code_exhaustive(6, Alphabet(2));
  const SearchResult b = max_code_exhaustive(6, Alphabet(2));
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness.words() == b.witness.words());
}

TEST_CASE("node limit turns the answer into a lower bound") {
  const SearchResult full = max_code_exhaustive(7, Alphabet(2));
  REQUIRE(full.complete);
  const SearchResult capped = max_code_exhaustive(7, Alphabet(2), /*node_limit=*/2);
  CHECK_FALSE(capped.complete);
  CHECK(capped.nodes_explored <= 3);
  CHECK(capped.max_size <= full.max_size);
  CHECK(is_non_overlapping(capped.witness));
}

TEST_CASE("enumeration cap guards the search") {
  CHECK_THROWS_AS(max_code_exhaustive(20, Alphabet(4)), EnumerationCapError);
}

TEST_CASE("greedy expansion") {
  const Code s36 = make_code(2, {"000101", "000111"});
  const Code grown = greedy_expand(s36, 6);
  CHECK(grown.size() > s36.size());
  for (const Word& w : s36.words()) CHECK(grown.contains(w));
  CHECK(grown.contains(make_word("001101")));
  CHECK(is_non_overlapping(grown));
  CHECK(is_non_expandable(grown).non_expandable);

  // A non-expandable input is a fixed point.
  const Code fixed = make_code(2, {"001011", "001101", "001111"});
  CHECK(greedy_expand(fixed, 6).words() == fixed.words());

  // From nothing, the lexicographic rule picks 01 over Z_2^2.
  const Code from_empty = greedy_expand(Code{Alphabet(2)}, 2);
  CHECK(from_empty.words() == make_code(2, {"01"}).words());

  CHECK_THROWS_AS(greedy_expand(make_code(2, {"0111", "0011"}), 4), std::invalid_argument);
  CHECK_THROWS_AS(greedy_expand(make_code(2, {"01"}), 3), std::invalid_argument);
}

TEST_CASE("greedy expansion always reaches a non-expandable code") {
  for (const auto [n, q] : {std::pair<unsigned, unsigned>{4, 2}, {5, 2}, {3, 3}}) {
    const Code grown = greedy_expand(Code{Alphabet(q)}, n);
    CHECK(is_non_overlapping(grown));
    CHECK(is_non_expandable(grown).non_expandable);
  }
}
