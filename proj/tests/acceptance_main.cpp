// Acceptance suite: one pass/fail line per criterion. Run with no arguments
// for all criteria, or with a list of criterion numbers (1..9).
//
// Environment: NOC_CLI = path to the CLI binary, NOC_GOLDEN = directory with
// the golden table CSVs (both are set by ctest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "noc/bounds.hpp"
#include "noc/code_io.hpp"
#include "noc/construct.hpp"
#include "noc/count.hpp"
#include "noc/search.hpp"
#include "noc/tables.hpp"
#include "noc/verify.hpp"

using namespace noc;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::string env_or_die(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr) throw Failure{std::string(name) + " is not set"};
  return value;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = env_or_die("NOC_CLI") + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot launch the CLI");
  std::string out;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  require(pclose(pipe) == 0, "CLI exited nonzero for: " + args);
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --------------------------------------------------------------------------
// 1. The published tables reproduce exactly through the CLI.

void criterion_tables() {
  const std::filesystem::path golden = env_or_die("NOC_GOLDEN");
  for (int table = 1; table <= 6; ++table) {
    const std::string produced = run_cli("tables --table " + std::to_string(table));
    const std::string expected = slurp(golden / ("table" + std::to_string(table) + ".csv"));
    require(produced == expected, "table " + std::to_string(table) + " differs from the golden CSV");
  }
}

// --------------------------------------------------------------------------
// 2. Enumeration and the closed forms agree exactly.

void criterion_enumeration_vs_formula() {
  for (unsigned q = 2; q <= 4; ++q) {
    for (unsigned i_size = 1; i_size < q; ++i_size) {
      const Bipartition bp = Bipartition::canonical(Alphabet(q), i_size);
      for (unsigned k = 1; k <= 4; ++k) {
        const auto coeffs = s_gf(i_size, q - i_size, k).coefficients(10);
        for (unsigned n = 2; n <= 10; ++n) {
          if (k > n - 1) continue;
          const BigInt enumerated(construction_i_prime(n, bp, k).size());
          require(enumerated == s_count(i_size, q - i_size, k, n),
                  "fixed-length count mismatch (enumeration vs recurrence)");
          require(enumerated == coeffs[n],
                  "fixed-length count mismatch (enumeration vs series)");
        }
      }
    }
  }
  for (unsigned q = 2; q <= 3; ++q) {
    for (unsigned i_size = 1; i_size < q; ++i_size) {
      const Bipartition bp = Bipartition::canonical(Alphabet(q), i_size);
      const auto coeffs = vcal_gf(i_size, q - i_size, 3).coefficients(12);
      for (unsigned n = 8; n <= 12; ++n) {
        const BigInt enumerated(construction_ii_prime(n, bp, 3).size());
        require(enumerated == vcal_count(i_size, q - i_size, 3, n),
                "variable-length count mismatch (enumeration vs recurrence)");
        require(enumerated == coeffs[n],
                "variable-length count mismatch (enumeration vs series)");
      }
    }
  }
}

// --------------------------------------------------------------------------
// 3. The three b-count routes agree with brute force on >= 50 profiles.

std::vector<Code> profile_grid() {
  std::vector<Code> grid;
  // construction outputs
  for (unsigned q = 2; q <= 3; ++q)
    for (unsigned i_size = 1; i_size < q; ++i_size)
      for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = k + 1; n <= 8; n += 1)
          if (k < n) grid.push_back(construction_i_prime(n, Bipartition::canonical(Alphabet(q), i_size), k));
  for (unsigned n = 8; n <= 12; ++n) grid.push_back(construction_ii(n, 3));
  for (unsigned i_size = 1; i_size <= 2; ++i_size)
    grid.push_back(construction_ii_prime(9, Bipartition::canonical(Alphabet(3), i_size), 3));
  grid.push_back(construction_i_prime(4, Bipartition::canonical(Alphabet(4), 2), 2));
  grid.push_back(construction_i_prime(5, Bipartition::canonical(Alphabet(4), 3), 1));
  // hand-picked small codes
  const auto handmade = [](unsigned q, std::initializer_list<std::string> words) {
    Code c{Alphabet(q)};
    for (const std::string& w : words) c.insert(parse_word(w, Alphabet(q)));
    return c;
  };
  grid.push_back(handmade(2, {"01"}));
  grid.push_back(handmade(2, {"011"}));
  grid.push_back(handmade(2, {"0011"}));
  grid.push_back(handmade(3, {"012"}));
  grid.push_back(handmade(3, {"01", "02"}));
  grid.push_back(handmade(4, {"03", "13", "23"}));
  return grid;
}

void criterion_b_three_way() {
  const std::vector<Code> grid = profile_grid();
  std::size_t usable = 0;
  for (const Code& code : grid) {
    if (code.empty()) continue;
    require(is_non_overlapping(code), "grid code is overlapping");
    ++usable;
    const auto profile = CodeSizeProfile::of(code);
    const auto gf = b_gf(profile).coefficients(12);
    for (unsigned m = 0; m <= 12; ++m) {
      const BigInt reference = avoiding_count_bruteforce(code, m);
      require(b_count_recurrence(profile, m) == reference, "b recurrence disagrees with brute force");
      require(b_count_multinomial(profile, m) == reference, "b multinomial disagrees with brute force");
      require(gf[m] == reference, "b series disagrees with brute force");
    }
  }
  require(usable >= 50, "profile grid has fewer than 50 codes: " + std::to_string(usable));
}

// --------------------------------------------------------------------------
// 4. The exactly-one-cyclic census matches the layered identity.

void criterion_cyclic_identity() {
  constexpr std::uint64_t cap = std::uint64_t{1} << 22;
  std::vector<Code> grid;
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = k + 1; n <= 7; ++n)
      if (k < n) grid.push_back(construction_i(n, Alphabet(2), k));
  for (unsigned n = 8; n <= 11; ++n) grid.push_back(construction_ii(n, 3));
  for (unsigned i_size = 1; i_size <= 2; ++i_size) {
    grid.push_back(construction_i_prime(4, Bipartition::canonical(Alphabet(3), i_size), 2));
    grid.push_back(construction_i_prime(5, Bipartition::canonical(Alphabet(3), i_size), 1));
  }
  grid.push_back(construction_i_prime(3, Bipartition::canonical(Alphabet(4), 2), 1));
  grid.push_back(construction_i_prime(4, Bipartition::canonical(Alphabet(4), 1), 2));

  std::size_t checked = 0;
  for (const Code& code : grid) {
    if (code.empty()) continue;
    const unsigned q = code.alphabet().size();
    const unsigned n = code.max_length();
    const unsigned h = code.min_length();
    const auto profile = CodeSizeProfile::of(code);
    for (unsigned m = 1; m < h; ++m) {
      const unsigned length = m + n;
      if (!enumeration_feasible(q, length, cap)) continue;
      BigInt rhs = 0;
      for (const auto& [len, cnt] : profile.sizes)
        rhs += BigInt(length) * b_count_recurrence(profile, static_cast<long long>(length) - len) * cnt;
      require(exactly_one_cyclic_count_bruteforce(code, length, cap) == rhs,
              "cyclic census disagrees with the identity");
      ++checked;
    }
  }
  require(checked >= 30, "too few feasible cyclic-identity instances: " + std::to_string(checked));
}

// --------------------------------------------------------------------------
// 5. Non-expandability holds on the grid; the two counterexamples reproduce.

void criterion_non_expandability() {
  for (unsigned q = 2; q <= 3; ++q) {
    for (unsigned i_size = 1; i_size < q; ++i_size) {
      const Bipartition bp = Bipartition::canonical(Alphabet(q), i_size);
      for (unsigned n = 3; n <= 8; ++n) {
        std::set<unsigned> ks{n - 1};
        for (unsigned k = 1; 2 * k < n; ++k) ks.insert(k);
        for (unsigned k : ks) {
          const Code code = construction_i_prime(n, bp, k);
          require(is_non_expandable(code).non_expandable,
                  "expected non-expandable at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
        }
      }
    }
  }

  const auto r36 = is_non_expandable(construction_i(6, Alphabet(2), 3));
  require(!r36.non_expandable && r36.expansion.has_value(), "first counterexample not found");
  require(*r36.expansion == parse_word("001101", Alphabet(2)), "first counterexample witness differs");
  const auto r47 = is_non_expandable(construction_i(7, Alphabet(2), 4));
  require(!r47.non_expandable && r47.expansion.has_value(), "second counterexample not found");
  require(*r47.expansion == parse_word("0001001", Alphabet(2)), "second counterexample witness differs");
}

// --------------------------------------------------------------------------
// 6. The exhaustive search re-verifies the optimality of the construction.

void criterion_optimality() {
  for (unsigned n = 2; n <= 8; ++n) {
    BigInt best = 0;
    for (unsigned k = 1; k < n; ++k) best = std::max(best, s_count(1, 1, k, n));
    const SearchResult result = max_code_exhaustive(n, Alphabet(2));
    require(result.complete, "search aborted");
    require(BigInt(result.max_size) == best, "C(n,2) disagrees with the best construction at n=" +
                                                 std::to_string(n));
  }
  const SearchResult r33 = max_code_exhaustive(3, Alphabet(3));
  require(r33.complete && r33.max_size == 4, "C(3,3) != 4");
}

// --------------------------------------------------------------------------
// 7. Epsilon values and dominant-ratio growth checks.

void criterion_epsilon_growth() {
  const Real golden = 1 - (1 + sqrt(Real(5))) / 4;  // 1 - phi/2
  const auto eps2 = epsilon_k(2);                   // internally dual-route checked at 1e-12
  require(abs(eps2.epsilon - golden) < Real("1e-9"), "epsilon_2 differs from 1 - phi/2");

  // Independent partial sum of the series, at the same accuracy.
  Real series = 0;
  for (unsigned i = 1; i <= 400; ++i) {
    BigInt binom = 1;
    for (unsigned j = 0; j + 1 < i; ++j) {
      binom *= 3 * i - 2 - j;
      binom /= j + 1;
    }
    series += Real(binom) / (Real(i) * pow(Real(2), static_cast<int>(3 * i)));
  }
  require(abs(series - golden) < Real("1e-9"), "epsilon_2 series differs from 1 - phi/2");

  for (unsigned k = 2; k <= 12; ++k) {
    const auto eps = epsilon_k(k);
    require(eps.epsilon > 0 && eps.epsilon < pow(Real(2), -static_cast<int>(k)),
            "epsilon_k outside (0, 2^-k) at k=" + std::to_string(k));
  }

  for (unsigned q : {2u, 4u}) {
    for (unsigned k : {2u, 3u}) {
      const Real ratio =
          Real(s_count(q / 2, q / 2, k, 201)) / Real(s_count(q / 2, q / 2, k, 200));
      require(abs(ratio - growth_rate(q, k, GrowthFamily::kFixed)) < Real("1e-3"),
              "size ratio is away from the growth rate at q=" + std::to_string(q) +
                  " k=" + std::to_string(k));
    }
  }
}

// --------------------------------------------------------------------------
// 8. Bound tightness and strictness behavior.

void criterion_bounds() {
  const struct {
    unsigned n, q;
  } attained[] = {{2, 4}, {2, 6}, {3, 6}};
  for (const auto [n, q] : attained) {
    const Bipartition bp = Bipartition::canonical(Alphabet(q), q / n);
    const Code code = construction_ia(n, bp, ForbiddenSet::power(bp.i_symbols(), 1));
    require(BigRat(code.size()) == levenshtein_bound(n, q).exact,
            "bound not attained at n=" + std::to_string(n) + " q=" + std::to_string(q));
  }

  std::size_t integral_cases = 0;
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned q = 2; q <= 12; ++q) {
      const BoundValue b = chee_bound(n, q);
      if (denominator(b.exact) == 1) {
        ++integral_cases;
        require(BigRat(b.integer_bound) < b.exact, "strictness did not bite on an integral bound");
      } else {
        require(BigRat(b.integer_bound) < b.exact && b.exact < BigRat(b.integer_bound + 1),
                "integer bound is not the floor");
      }
    }
  }
  require(integral_cases > 0, "no integral chee values in the grid");

  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned q = 2; q <= 4; ++q) {
      CodeSizeProfile empty;
      empty.q = q;
      require(recursive_bound_min(empty, n).bound.exact == BigRat(pow_int(q, n), 2 * BigInt(n) - 1),
              "h = n minimum differs from q^n/(2n-1)");
    }
  }
}

// --------------------------------------------------------------------------
// 9. Binary specializations of the generating functions.

void criterion_binary_specializations() {
  for (unsigned k = 2; k <= 6; ++k) {
    const IntPolynomial num{1, -2, 1};
    const IntPolynomial den =
        IntPolynomial{1, -2} + IntPolynomial::monomial(2, k + 1) - IntPolynomial::monomial(1, 2 * k);
    const auto reference = RationalSeries(num, den).coefficients(40);
    const auto ours = r_gf(1, 1, k).coefficients(40);
    require(reference[0] == 1, "binary r series must start at 1");
    for (unsigned n = 0; n <= 40; ++n)
      require(ours[n] == reference[n] && ours[n] == r_count(1, 1, k, n),
              "binary r specialization differs at n=" + std::to_string(n));
  }

  for (unsigned k = 3; k <= 6; ++k)
    require(d_k_identity_check(k, 40), "d^(k) identity fails for k=" + std::to_string(k));

  for (unsigned k = 3; k <= 5; ++k) {
    const IntPolynomial delta = IntPolynomial::monomial(1, 1) - IntPolynomial::monomial(1, k);
    const IntPolynomial num = IntPolynomial::monomial(1, 2 * k) * delta * delta;
    const IntPolynomial den = IntPolynomial{1, -1} *
                              (IntPolynomial{1} - IntPolynomial::monomial(1, k)) *
                              (IntPolynomial{1, -2} + IntPolynomial::monomial(1, k));
    const auto reference = RationalSeries(num, den).coefficients(40);
    const auto ours = vcal_gf(1, 1, k).coefficients(40);
    for (unsigned n = 0; n <= 40; ++n)
      require(ours[n] == reference[n],
              "binary vcal specialization differs at n=" + std::to_string(n));
  }
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;  // 0 = no budget stated
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "table reproduction (exact)", 5.0, criterion_tables},
      {2, "enumeration == closed forms", 120.0, criterion_enumeration_vs_formula},
      {3, "b three-way agreement", 120.0, criterion_b_three_way},
      {4, "cyclic-count identity", 180.0, criterion_cyclic_identity},
      {5, "non-expandability grid + counterexamples", 60.0, criterion_non_expandability},
      {6, "optimality re-verification", 600.0, criterion_optimality},
      {7, "epsilon and growth rates", 0.0, criterion_epsilon_growth},
      {8, "bound tightness and strictness", 60.0, criterion_bounds},
      {9, "binary specializations", 0.0, criterion_binary_specializations},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << criterion.budget_seconds << " s budget";
      error = os.str();
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", error.empty() ? "PASS" : "FAIL",
                criterion.number, criterion.label, elapsed, error.empty() ? "" : " - ",
                error.c_str());
    std::fflush(stdout);
    if (!error.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
