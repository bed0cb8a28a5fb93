// Command-line interface for constructing, verifying, counting, bounding,
// and searching non-overlapping codes, plus reference-table generation.
//
// Exit codes: 0 success, 1 verification negative (overlap found, or
// expandable when --expandable was requested), 2 invalid parameters,
// 3 malformed input file.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "noc/bounds.hpp"
#include "noc/code_io.hpp"
#include "noc/construct.hpp"
#include "noc/count.hpp"
#include "noc/search.hpp"
#include "noc/tables.hpp"
#include "noc/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitBadFile = 3;

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("NOC_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("NOC_ENUM_CAP must be an unsigned integer");
    }
  }
  return noc::kDefaultEnumerationCap;
}

std::string rational_str(const noc::BigRat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

std::string real_str(const noc::Real& x) {
  std::ostringstream os;
  os.precision(30);
  os << x;
  return os.str();
}

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump() << '\n';
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------
// construct

struct BipartitionFlags {
  unsigned q = 0;
  unsigned i_size = 0;
  std::string i_list, j_list;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "alphabet size");
    cmd->add_option("--isize", i_size, "use the canonical split I={0..isize-1}");
    cmd->add_option("--i", i_list, "comma-separated symbols of I");
    cmd->add_option("--j", j_list, "comma-separated symbols of J");
  }

  static std::set<noc::Symbol> parse_symbols(const std::string& list) {
    std::set<noc::Symbol> out;
    std::stringstream ss(list);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) throw std::invalid_argument("empty symbol in list");
      out.insert(static_cast<noc::Symbol>(std::stoul(part)));
    }
    return out;
  }

  noc::Bipartition resolve() const {
    if (!i_list.empty() || !j_list.empty()) {
      if (i_list.empty() || j_list.empty())
        throw std::invalid_argument("--i and --j must be given together");
      auto bp = noc::Bipartition::from_sets(parse_symbols(i_list), parse_symbols(j_list));
      if (q != 0 && q != bp.alphabet().size())
        throw std::invalid_argument("--q disagrees with |I| + |J|");
      return bp;
    }
    if (i_size == 0) throw std::invalid_argument("give either --isize or --i/--j");
    if (q == 0) throw std::invalid_argument("--isize needs --q");
    return noc::Bipartition::canonical(noc::Alphabet(q), i_size);
  }
};

std::string symbols_str(const std::vector<noc::Symbol>& symbols) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) os << ',';
    os << symbols[i];
  }
  os << '}';
  return os.str();
}

int run_construct(const std::string& family, unsigned n, unsigned k,
                  const BipartitionFlags& bp_flags, const std::string& c_path,
                  const std::string& out_path) {
  noc::Code code = [&]() -> noc::Code {
    if (family == "i") {
      if (bp_flags.q == 0) throw std::invalid_argument("construct i needs --q");
      return noc::construction_i(n, noc::Alphabet(bp_flags.q), k);
    }
    if (family == "ii") return noc::construction_ii(n, k);
    const noc::Bipartition bp = bp_flags.resolve();
    if (family == "i-prime") return noc::construction_i_prime(n, bp, k);
    if (family == "ii-prime") return noc::construction_ii_prime(n, bp, k);
    // ia: blocks come from a code file; all must have the same length k.
    const noc::Code c_code = noc::read_code_file(c_path);
    if (c_code.empty()) return noc::Code{bp.alphabet()};
    if (!c_code.fixed_length()) throw std::invalid_argument("blocks in C must all have the same length");
    std::set<noc::Word> blocks(c_code.words().begin(), c_code.words().end());
    noc::ForbiddenSet c(c_code.min_length(), std::move(blocks));
    return noc::construction_ia(n, bp, c);
  }();

  std::ostringstream echo;
  echo << "construction=" << family << " q=" << code.alphabet().size() << " n=" << n;
  if (family != "ia") echo << " k=" << k;
  if (family == "i-prime" || family == "ii-prime" || family == "ia") {
    const noc::Bipartition bp = bp_flags.resolve();
    echo << " I=" << symbols_str(bp.i_symbols()) << " J=" << symbols_str(bp.j_symbols());
  }
  echo << " size=" << code.size() << '\n';

  if (!out_path.empty()) {
    noc::write_code_file(out_path, code);
    std::cout << echo.str();
  } else {
    std::cerr << echo.str();
    noc::write_code(std::cout, code);
  }
  return kExitOk;
}

void add_construct(CLI::App& app, int& rc) {
  auto* cmd = app.add_subcommand("construct", "build a code and write it in the code file format");
  cmd->require_subcommand(1);
  for (const std::string family : {"i", "ia", "i-prime", "ii", "ii-prime"}) {
    auto* sub = cmd->add_subcommand(family);
    auto n = std::make_shared<unsigned>(0);
    auto k = std::make_shared<unsigned>(0);
    auto out = std::make_shared<std::string>();
    auto c_path = std::make_shared<std::string>();
    auto bp = std::make_shared<BipartitionFlags>();
    sub->add_option("--n", *n, "codeword length (maximum length for ii/ii-prime)")->required();
    if (family != "ia") sub->add_option("--k", *k, "run-length parameter")->required();
    if (family == "ia") sub->add_option("--c", *c_path, "code file holding the blocks C")->required();
    sub->add_option("--out", *out, "output path (stdout when omitted)");
    if (family == "i")
      sub->add_option("--q", bp->q, "alphabet size")->required();
    else if (family != "ii")
      bp->attach(sub);
    sub->callback([&rc, family, n, k, c_path, out, bp] {
      rc = run_construct(family, *n, *k, *bp, *c_path, *out);
    });
  }
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& in_path, bool expandable) {
  const noc::Code code = noc::read_code_file(in_path);
  if (auto witness = noc::find_overlap(code)) {
    const char* kind =
        witness->kind == noc::OverlapWitness::Kind::kPrefixSuffix ? "prefix-suffix" : "subword";
    std::cout << "overlapping: kind=" << kind
              << " u=" << noc::format_word(witness->u, code.alphabet())
              << " v=" << noc::format_word(witness->v, code.alphabet())
              << " overlap=" << noc::format_word(witness->overlap, code.alphabet()) << '\n';
    return kExitVerifyFail;
  }
  std::cout << "non-overlapping: size=" << code.size() << '\n';
  if (expandable) {
    const auto result = noc::is_non_expandable(code, enumeration_cap());
    if (!result.non_expandable) {
      std::cout << "expandable: by=" << noc::format_word(*result.expansion, code.alphabet())
                << '\n';
      return kExitVerifyFail;
    }
    std::cout << "non-expandable\n";
  }
  return kExitOk;
}

void add_verify(CLI::App& app, int& rc) {
  auto* cmd = app.add_subcommand("verify", "check the non-overlap conditions on a code file");
  auto in = std::make_shared<std::string>();
  auto expandable = std::make_shared<bool>(false);
  cmd->add_option("--in", *in, "code file")->required();
  cmd->add_flag("--expandable", *expandable, "also require non-expandability");
  cmd->callback([&rc, in, expandable] { rc = run_verify(*in, *expandable); });
}

// ---------------------------------------------------------------------------
// count

struct SizeFlags {
  unsigned i_size = 0;
  unsigned j_size = 0;
  unsigned q = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--isize", i_size, "|I|")->required();
    cmd->add_option("--jsize", j_size, "|J| (or give --q)");
    cmd->add_option("--q", q, "alphabet size; |J| = q - |I|");
  }

  std::pair<unsigned, unsigned> resolve() const {
    if (j_size != 0) {
      if (q != 0 && q != i_size + j_size)
        throw std::invalid_argument("--q disagrees with --isize + --jsize");
      return {i_size, j_size};
    }
    if (q == 0 || q <= i_size) throw std::invalid_argument("need --jsize, or --q greater than --isize");
    return {i_size, q - i_size};
  }
};

void add_count(CLI::App& app, int& rc, bool& as_json) {
  auto* cmd = app.add_subcommand("count", "exact cardinalities, b-counts, epsilon and growth rates");
  cmd->require_subcommand(1);

  for (const std::string quantity : {"u", "s", "r", "v", "vcal"}) {
    auto* sub = cmd->add_subcommand(quantity);
    auto sizes = std::make_shared<SizeFlags>();
    auto k = std::make_shared<unsigned>(0);
    auto n = std::make_shared<long long>(0);
    sizes->attach(sub);
    sub->add_option("--k", *k, "run-length parameter")->required();
    sub->add_option("--n", *n, "length")->required();
    sub->callback([&rc, &as_json, quantity, sizes, k, n] {
      const auto [i_size, j_size] = sizes->resolve();
      noc::BigInt value;
      if (quantity == "u")
        value = noc::u_count(i_size, j_size, *k, *n);
      else if (quantity == "s")
        value = noc::s_count(i_size, j_size, *k, *n);
      else if (quantity == "r")
        value = noc::r_count(i_size, j_size, *k, *n);
      else if (quantity == "v")
        value = noc::v_count(i_size, j_size, *k, static_cast<unsigned>(*n));
      else
        value = noc::vcal_count(i_size, j_size, *k, static_cast<unsigned>(*n));
      json doc{{"command", "count " + quantity},
               {"params", json{{"isize", i_size}, {"jsize", j_size}, {"k", *k}, {"n", *n}}},
               {"values", json{{"count", value.str()}}}};
      emit(doc, as_json, value.str() + "\n");
      rc = kExitOk;
    });
  }

  {
    auto* sub = cmd->add_subcommand("b");
    auto in = std::make_shared<std::string>();
    auto profile_path = std::make_shared<std::string>();
    auto m = std::make_shared<long long>(0);
    auto assume_valid = std::make_shared<bool>(false);
    sub->add_option("--in", *in, "code file (profile derived from it)");
    sub->add_option("--profile", *profile_path, "profile file");
    sub->add_option("--m", *m, "word length to count")->required();
    sub->add_flag("--assume-valid", *assume_valid, "skip the non-overlap verification of --in");
    sub->callback([&rc, &as_json, in, profile_path, m, assume_valid] {
      noc::CodeSizeProfile profile;
      if (!in->empty()) {
        const noc::Code code = noc::read_code_file(*in);
        if (!*assume_valid && !noc::is_non_overlapping(code))
          throw std::invalid_argument(
              "input code is overlapping; b-counts require a non-overlapping code");
        profile = noc::CodeSizeProfile::of(code);
      } else if (!profile_path->empty()) {
        profile = noc::read_profile_file(*profile_path);
      } else {
        throw std::invalid_argument("give --in or --profile");
      }
      const noc::BigInt value = noc::b_count_recurrence(profile, *m);
      json doc{{"command", "count b"},
               {"params", json{{"q", profile.q}, {"m", *m}}},
               {"values", json{{"count", value.str()}}}};
      emit(doc, as_json, value.str() + "\n");
      rc = kExitOk;
    });
  }

  {
    auto* sub = cmd->add_subcommand("epsilon");
    auto k = std::make_shared<unsigned>(0);
    auto tolerance = std::make_shared<std::string>("1e-12");
    sub->add_option("--k", *k, "index")->required();
    sub->add_option("--tolerance", *tolerance, "root/series agreement tolerance");
    sub->callback([&rc, &as_json, k, tolerance] {
      const auto result = noc::epsilon_k(*k, noc::Real(*tolerance));
      json doc{{"command", "count epsilon"},
               {"params", json{{"k", *k}, {"tolerance", *tolerance}}},
               {"values", json{{"epsilon", real_str(result.epsilon)}, {"y0", real_str(result.y0)}}}};
      emit(doc, as_json,
           "epsilon=" + real_str(result.epsilon) + "\ny0=" + real_str(result.y0) + "\n");
      rc = kExitOk;
    });
  }

  {
    auto* sub = cmd->add_subcommand("rate");
    auto q = std::make_shared<unsigned>(0);
    auto k = std::make_shared<unsigned>(0);
    auto family = std::make_shared<std::string>();
    sub->add_option("--q", *q, "alphabet size (even)")->required();
    sub->add_option("--k", *k, "run-length parameter")->required();
    sub->add_option("--family", *family, "fixed or variable")
        ->required()
        ->check(CLI::IsMember({"fixed", "variable"}));
    sub->callback([&rc, &as_json, q, k, family] {
      const auto fam = *family == "fixed" ? noc::GrowthFamily::kFixed : noc::GrowthFamily::kVariable;
      const noc::Real rate = noc::growth_rate(*q, *k, fam);
      json doc{{"command", "count rate"},
               {"params", json{{"q", *q}, {"k", *k}, {"family", *family}}},
               {"values", json{{"rate", real_str(rate)}}}};
      emit(doc, as_json, "rate=" + real_str(rate) + "\n");
      rc = kExitOk;
    });
  }
}

// ---------------------------------------------------------------------------
// bound

json bound_values(const noc::BoundValue& b) {
  return json{{"exact", rational_str(b.exact)},
              {"integer_bound", b.integer_bound.str()},
              {"strict", b.strict}};
}

std::string bound_text(const noc::BoundValue& b) {
  std::ostringstream os;
  os << "exact=" << rational_str(b.exact) << " integer_bound=" << b.integer_bound
     << " strict=" << (b.strict ? "true" : "false");
  return os.str();
}

void add_bound(CLI::App& app, int& rc, bool& as_json) {
  auto* cmd = app.add_subcommand("bound", "upper bounds on code sizes");
  cmd->require_subcommand(1);

  for (const std::string kind : {"lev", "chee"}) {
    auto* sub = cmd->add_subcommand(kind);
    auto n = std::make_shared<unsigned>(0);
    auto q = std::make_shared<unsigned>(0);
    sub->add_option("--n", *n, "codeword length")->required();
    sub->add_option("--q", *q, "alphabet size")->required();
    sub->callback([&rc, &as_json, kind, n, q] {
      const noc::BoundValue b = kind == "lev" ? noc::levenshtein_bound(*n, *q) : noc::chee_bound(*n, *q);
      json doc{{"command", "bound " + kind},
               {"params", json{{"n", *n}, {"q", *q}}},
               {"values", bound_values(b)}};
      emit(doc, as_json, bound_text(b) + "\n");
      rc = kExitOk;
    });
  }

  for (const std::string kind : {"recursive", "recursive-min"}) {
    auto* sub = cmd->add_subcommand(kind);
    auto n = std::make_shared<unsigned>(0);
    auto m = std::make_shared<unsigned>(0);
    auto q = std::make_shared<unsigned>(0);
    auto profile_path = std::make_shared<std::string>();
    auto in_path = std::make_shared<std::string>();
    sub->add_option("--n", *n, "target codeword length")->required();
    if (kind == "recursive") sub->add_option("--m", *m, "window extension, 1 <= m < h")->required();
    sub->add_option("--profile", *profile_path, "profile file for lengths h..n-1");
    sub->add_option("--in", *in_path, "code file; its length profile is used");
    sub->add_option("--q", *q, "alphabet size when no profile is given (h = n)");
    sub->callback([&rc, &as_json, kind, n, m, q, profile_path, in_path] {
      noc::CodeSizeProfile profile;
      if (!profile_path->empty()) {
        profile = noc::read_profile_file(*profile_path);
      } else if (!in_path->empty()) {
        profile = noc::CodeSizeProfile::of(noc::read_code_file(*in_path));
      } else if (*q != 0) {
        profile.q = *q;
      } else {
        throw std::invalid_argument("give --profile, --in, or --q");
      }
      json params{{"q", profile.q}, {"n", *n}};
      if (kind == "recursive") {
        const noc::BoundValue b = noc::recursive_bound(profile, *n, *m);
        params["m"] = *m;
        json doc{{"command", "bound recursive"}, {"params", params}, {"values", bound_values(b)}};
        emit(doc, as_json, bound_text(b) + "\n");
      } else {
        const noc::RecursiveBoundMin b = noc::recursive_bound_min(profile, *n);
        json values = bound_values(b.bound);
        values["m"] = b.m;
        json doc{{"command", "bound recursive-min"}, {"params", params}, {"values", values}};
        emit(doc, as_json, bound_text(b.bound) + " m=" + std::to_string(b.m) + "\n");
      }
      rc = kExitOk;
    });
  }
}

// ---------------------------------------------------------------------------
// search

void add_search(CLI::App& app, int& rc, bool& as_json) {
  auto* cmd = app.add_subcommand("search", "exact maximum fixed-length code by branch and bound");
  auto n = std::make_shared<unsigned>(0);
  auto q = std::make_shared<unsigned>(0);
  auto node_limit = std::make_shared<std::uint64_t>(std::numeric_limits<std::uint64_t>::max());
  auto out = std::make_shared<std::string>();
  cmd->add_option("--n", *n, "codeword length")->required();
  cmd->add_option("--q", *q, "alphabet size")->required();
  cmd->add_option("--node-limit", *node_limit, "abort after this many explored nodes");
  cmd->add_option("--out", *out, "write the witness code to this file");
  cmd->callback([&rc, &as_json, n, q, node_limit, out] {
    const noc::SearchResult result =
        noc::max_code_exhaustive(*n, noc::Alphabet(*q), *node_limit, enumeration_cap());
    if (!out->empty()) noc::write_code_file(*out, result.witness);
    json witness = json::array();
    for (const noc::Word& w : result.witness.words())
      witness.push_back(noc::format_word(w, result.witness.alphabet()));
    json doc{{"command", "search"},
             {"params", json{{"n", *n}, {"q", *q}}},
             {"values", json{{"max_size", std::to_string(result.max_size)},
                             {"nodes_explored", std::to_string(result.nodes_explored)},
                             {"complete", result.complete},
                             {"witness", witness}}}};
    std::ostringstream text;
    text << "max_size=" << result.max_size << " nodes_explored=" << result.nodes_explored
         << " complete=" << (result.complete ? "true" : "false") << '\n';
    for (const noc::Word& w : result.witness.words())
      text << noc::format_word(w, result.witness.alphabet()) << '\n';
    emit(doc, as_json, text.str());
    rc = kExitOk;
  });
}

// ---------------------------------------------------------------------------
// tables

std::string table_csv(unsigned table_id) {
  std::ostringstream os;
  const unsigned q = noc::table_alphabet(table_id);
  if (!noc::table_is_variable(table_id)) {
    os << "n,construction_I,construction_I_prime\n";
    for (const auto& row : noc::fixed_length_table(q))
      os << row.n << ',' << row.construction_i << ',' << row.construction_i_prime << '\n';
  } else {
    os << "n,k,cardinality\n";
    for (const auto& cell : noc::variable_length_table(q))
      os << cell.n << ',' << cell.k << ',' << cell.cardinality << '\n';
  }
  return os.str();
}

json table_json(unsigned table_id) {
  const unsigned q = noc::table_alphabet(table_id);
  json rows = json::array();
  json header;
  if (!noc::table_is_variable(table_id)) {
    header = json::array({"n", "construction_I", "construction_I_prime"});
    for (const auto& row : noc::fixed_length_table(q))
      rows.push_back(json::array(
          {std::to_string(row.n), row.construction_i.str(), row.construction_i_prime.str()}));
  } else {
    header = json::array({"n", "k", "cardinality"});
    for (const auto& cell : noc::variable_length_table(q))
      rows.push_back(
          json::array({std::to_string(cell.n), std::to_string(cell.k), cell.cardinality.str()}));
  }
  return json{{"command", "tables"},
              {"params", json{{"table", table_id}, {"q", q}}},
              {"values", json{{"header", header}, {"rows", rows}}}};
}

void add_tables(CLI::App& app, int& rc) {
  auto* cmd = app.add_subcommand("tables", "reference tables of largest construction sizes");
  auto table_id = std::make_shared<unsigned>(0);
  auto format = std::make_shared<std::string>("csv");
  auto out = std::make_shared<std::string>();
  cmd->add_option("--table", *table_id, "table id 1..6")->required();
  cmd->add_option("--format", *format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", *out, "output path (stdout when omitted)");
  cmd->callback([&rc, table_id, format, out] {
    const std::string payload =
        *format == "csv" ? table_csv(*table_id) : table_json(*table_id).dump() + "\n";
    if (out->empty()) {
      std::cout << payload;
    } else {
      std::ofstream file(*out);
      if (!file) throw std::runtime_error("cannot write '" + *out + "'");
      file << payload;
    }
    rc = kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-overlapping code toolkit"};
  app.require_subcommand(1);
  int rc = kExitOk;
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON ({command, params, values}) on stdout");

  add_construct(app, rc);
  add_verify(app, rc);
  add_count(app, rc, as_json);
  add_bound(app, rc, as_json);
  add_search(app, rc, as_json);
  add_tables(app, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_rc = app.exit(e);
    return cli_rc == 0 ? kExitOk : kExitBadParams;
  } catch (const noc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadFile;
  } catch (const noc::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadParams;
  }
  return rc;
}
