#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "noc/bounds.hpp"
#include "noc/construct.hpp"
#include "noc/count.hpp"
#include "noc/verify.hpp"

using namespace noc;
using test::make_code;
using test::make_word;

TEST_CASE("forbidden sets and freeness") {
  const ForbiddenSet c(2, {make_word("00")});
  CHECK(is_free(make_word("11"), c));
  CHECK_FALSE(is_free(make_word("1001"), c));
  CHECK(is_free(make_word("0"), c));  // shorter than the block length
  CHECK_THROWS_AS(ForbiddenSet(2, {make_word("000")}), std::invalid_argument);
}

TEST_CASE("phi expansion of a single word") {
  const Bipartition bp = Bipartition::from_sets({0, 2}, {1, 3});
  const auto expanded = phi_expand(make_word("001"), bp);
  CHECK(expanded.size() == 8);
  for (const Word& w : expanded) {
    CHECK(bp.in_i(w[0]));
    CHECK(bp.in_i(w[1]));
    CHECK(bp.in_j(w[2]));
  }
  CHECK(std::is_sorted(expanded.begin(), expanded.end()));

  const Bipartition identity = Bipartition::from_sets({0}, {1});
  CHECK(phi_expand(make_word("0110"), identity) == std::vector<Word>{make_word("0110")});

  const Bipartition lopsided = Bipartition::from_sets({0, 1}, {2});
  const auto pair = phi_expand(make_word("01"), lopsided);
  CHECK(pair == std::vector<Word>{make_word("02"), make_word("12")});

  CHECK_THROWS_AS(phi_expand(make_word("012"), bp), std::invalid_argument);
}

TEST_CASE("phi expansion of codes") {
  const Bipartition bp = Bipartition::from_sets({0}, {1, 2});
  const Code image = phi_code(make_code(2, {"01"}), bp);
  CHECK(image.words() == make_code(3, {"01", "02"}).words());

  CHECK(phi_code(Code{Alphabet(2)}, bp).empty());

  // Size of the image of S_2^(2)(6) appears in the q=3 reference table at n=6.
  const Code s26 = construction_i(6, Alphabet(2), 2);
  CHECK(phi_code(s26, bp).size() == 32);

  CHECK_THROWS_AS(phi_code(make_code(3, {"01"}), bp), std::invalid_argument);
}

TEST_CASE("construction I reference outputs") {
  CHECK(construction_i(6, Alphabet(2), 2).words() ==
        make_code(2, {"001011", "001101", "001111"}).words());
  CHECK(construction_i(3, Alphabet(6), 1).size() == 25);
  CHECK(construction_i(2, Alphabet(2), 1).words() == make_code(2, {"01"}).words());
  CHECK_THROWS_AS(construction_i(4, Alphabet(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(construction_i(4, Alphabet(2), 4), std::invalid_argument);
}

TEST_CASE("construction I.A") {
  const Bipartition bp = Bipartition::from_sets({0, 1}, {2, 3});

  SUBCASE("C = I^k reproduces construction I'") {
    const ForbiddenSet c = ForbiddenSet::power(bp.i_symbols(), 2);
    for (unsigned n = 3; n <= 6; ++n)
      CHECK(construction_ia(n, bp, c).words() == construction_i_prime(n, bp, 2).words());
  }

  SUBCASE("C = I gives I x J^{n-1}") {
    const ForbiddenSet c = ForbiddenSet::power(bp.i_symbols(), 1);
    const Code code = construction_ia(2, bp, c);
    CHECK(code.size() == 4);
    CHECK(code.words() == make_code(4, {"02", "03", "12", "13"}).words());
    // n | q with |I| = q/n: meets the fixed-length bound exactly.
    CHECK(BigRat(code.size()) == levenshtein_bound(2, 4).exact);
  }

  SUBCASE("empty C gives the empty code") {
    CHECK(construction_ia(4, bp, ForbiddenSet(2, {})).empty());
  }

  SUBCASE("C outside I^k is rejected") {
    CHECK_THROWS_AS(construction_ia(4, bp, ForbiddenSet(2, {make_word("02")})),
                    std::invalid_argument);
  }

  SUBCASE("arbitrary C inside I^k") {
    const ForbiddenSet c(2, {make_word("01"), make_word("10")});
    const Code code = construction_ia(5, bp, c);
    CHECK(is_non_overlapping(code));
    for (const Word& w : code.words()) {
      CHECK(c.blocks.count(w.prefix(2)) == 1);
      CHECK(bp.in_j(w[2]));
      CHECK(bp.in_j(w[4]));
      CHECK(is_free(w.suffix(3), c));
    }
  }
}

TEST_CASE("construction I' reference outputs") {
  // I = {0} collapses to construction I.
  for (unsigned q = 2; q <= 4; ++q)
    for (unsigned n = 3; n <= 6; ++n)
      for (unsigned k = 1; k < n; ++k)
        CHECK(construction_i_prime(n, Bipartition::canonical(Alphabet(q), 1), k).words() ==
              construction_i(n, Alphabet(q), k).words());

  CHECK(construction_i_prime(7, Bipartition::canonical(Alphabet(3), 1), 2).size() == 88);
  CHECK(construction_i_prime(3, Bipartition::canonical(Alphabet(5), 3), 2).size() == 18);
}

TEST_CASE("construction I' equals the phi image of the binary code") {
  for (unsigned q = 3; q <= 4; ++q) {
    for (unsigned i_size = 1; i_size < q; ++i_size) {
      const Bipartition bp = Bipartition::canonical(Alphabet(q), i_size);
      for (unsigned n = 3; n <= 7; ++n)
        for (unsigned k = 1; k < n; ++k)
          CHECK(construction_i_prime(n, bp, k).words() ==
                phi_code(construction_i(n, Alphabet(2), k), bp).words());
    }
  }
}

TEST_CASE("construction I' size depends only on the class sizes") {
  const unsigned q = 4, n = 6, k = 2;
  for (unsigned i_size = 1; i_size < q; ++i_size) {
    const std::size_t reference =
        construction_i_prime(n, Bipartition::canonical(Alphabet(q), i_size), k).size();
    for (unsigned mask = 1; mask + 1 < (1u << q); ++mask) {
      std::set<Symbol> i_set;
      for (unsigned bit = 0; bit < q; ++bit)
        if (mask & (1u << bit)) i_set.insert(bit);
      if (i_set.size() != i_size) continue;
      CHECK(construction_i_prime(n, Bipartition(Alphabet(q), i_set), k).size() == reference);
    }
  }
}

TEST_CASE("construction II reference outputs") {
  const Code code = construction_ii(10, 3);
  CHECK(code.words() == make_code(2, {"11101000", "111011000", "111001000", "1110101000",
                                      "1110011000"})
                            .words());
  CHECK(construction_ii(8, 3).words() == make_code(2, {"11101000"}).words());

  // Minimal n = 2k+2 gives a single length.
  const Code minimal = construction_ii(10, 4);
  CHECK(minimal.min_length() == 10);
  CHECK(minimal.max_length() == 10);

  CHECK_THROWS_AS(construction_ii(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(construction_ii(7, 3), std::invalid_argument);
}

TEST_CASE("construction II' reference outputs") {
  // I = {0}, J = {1} collapses to construction II.
  const Bipartition binary = Bipartition::from_sets({0}, {1});
  for (unsigned n = 8; n <= 12; ++n)
    CHECK(construction_ii_prime(n, binary, 3).words() == construction_ii(n, 3).words());

  unsigned best = 0;
  for (unsigned i_size = 1; i_size <= 2; ++i_size)
    best = std::max<unsigned>(
        best, construction_ii_prime(10, Bipartition::canonical(Alphabet(3), i_size), 3).size());
  CHECK(best == 128);

  CHECK(construction_ii_prime(8, Bipartition::canonical(Alphabet(4), 2), 3).size() == 256);
}

TEST_CASE("construction II' output decomposes into blocks") {
  const Bipartition bp = Bipartition::canonical(Alphabet(3), 1);
  const unsigned k = 3;
  const Code code = construction_ii_prime(11, bp, k);
  const ForbiddenSet forbidden(
      k, [&] {
        std::set<Word> blocks = ForbiddenSet::power(bp.i_symbols(), k).blocks;
        for (const Word& w : ForbiddenSet::power(bp.j_symbols(), k).blocks) blocks.insert(w);
        return blocks;
      }());
  for (const Word& w : code.words()) {
    const std::size_t len = w.size();
    for (unsigned i = 0; i < k; ++i) {
      CHECK(bp.in_j(w[i]));
      CHECK(bp.in_i(w[len - 1 - i]));
    }
    const Word middle = Word(std::vector<Symbol>(w.symbols().begin() + k, w.symbols().end() - k));
    CHECK(bp.in_i(middle[0]));
    CHECK(bp.in_j(middle[middle.size() - 1]));
    CHECK(is_free(middle, forbidden));
  }
}

TEST_CASE("all constructions emit non-overlapping codes") {
  for (unsigned q = 2; q <= 4; ++q) {
    for (unsigned i_size = 1; i_size < q; ++i_size) {
      const Bipartition bp = Bipartition::canonical(Alphabet(q), i_size);
      for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 1; k < n; ++k)
          CHECK(is_non_overlapping(construction_i_prime(n, bp, k)));
      for (unsigned n = 8; n <= 12; ++n)
        for (unsigned k = 3; 2 * k + 2 <= n; ++k)
          CHECK(is_non_overlapping(construction_ii_prime(n, bp, k)));
    }
  }
}
