#include "noc/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace noc {

namespace {

std::string strip(const std::string& line) {
  const auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

bool skip_line(const std::string& stripped) { return stripped.empty() || stripped[0] == '#'; }

unsigned parse_q_header(const std::string& line) {
  if (line.rfind("q=", 0) != 0) throw ParseError("expected header line 'q=<integer>'");
  const std::string value = line.substr(2);
  std::size_t used = 0;
  unsigned long q = 0;
  try {
    q = std::stoul(value, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid alphabet size in header: '" + value + "'");
  }
  if (used != value.size() || q < 2) throw ParseError("invalid alphabet size in header: '" + value + "'");
  return static_cast<unsigned>(q);
}

Symbol parse_symbol(const std::string& text, const Alphabet& alphabet) {
  std::size_t used = 0;
  unsigned long s = 0;
  try {
    s = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid symbol '" + text + "'");
  }
  if (used != text.size() || s >= alphabet.size())
    throw ParseError("symbol '" + text + "' out of range for q=" + std::to_string(alphabet.size()));
  return static_cast<Symbol>(s);
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  std::vector<Symbol> symbols;
  if (alphabet.size() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string("invalid digit '") + c + "' in word");
      const Symbol s = static_cast<Symbol>(c - '0');
      if (s >= alphabet.size())
        throw ParseError(std::string("symbol '") + c + "' out of range for q=" +
                         std::to_string(alphabet.size()));
      symbols.push_back(s);
    }
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) symbols.push_back(parse_symbol(strip(part), alphabet));
  }
  if (symbols.empty()) throw ParseError("empty word");
  return Word(std::move(symbols));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::ostringstream os;
  bool first = true;
  for (Symbol s : w.symbols()) {
    if (alphabet.size() > 10 && !first) os << ',';
    os << s;
    first = false;
  }
  return os.str();
}

Code read_code(std::istream& in) {
  std::string line;
  unsigned q = 0;
  bool have_q = false;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    const std::string text = strip(line);
    if (skip_line(text)) continue;
    if (!have_q) {
      q = parse_q_header(text);
      have_q = true;
      continue;
    }
    words.push_back(parse_word(text, Alphabet(q)));
  }
  if (!have_q) throw ParseError("missing 'q=<integer>' header line");
  Code code{Alphabet(q)};
  for (Word& w : words) {
    try {
      code.insert(std::move(w));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return code;
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  out << "q=" << code.alphabet().size() << '\n';
  for (const Word& w : code.words()) out << format_word(w, code.alphabet()) << '\n';
}

void write_code_file(const std::string& path, const Code& code) {
  std::ostringstream buffer;
  write_code(buffer, code);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << buffer.str();
}

CodeSizeProfile read_profile(std::istream& in) {
  std::string line;
  CodeSizeProfile profile;
  bool have_q = false;
  while (std::getline(in, line)) {
    const std::string text = strip(line);
    if (skip_line(text)) continue;
    if (!have_q) {
      profile.q = parse_q_header(text);
      have_q = true;
      continue;
    }
    std::istringstream ss(text);
    long long length = 0;
    std::string count_text;
    if (!(ss >> length >> count_text) || length < 2)
      throw ParseError("expected '<length> <count>' with length >= 2, got '" + text + "'");
    std::string trailing;
    if (ss >> trailing) throw ParseError("trailing content in profile line '" + text + "'");
    BigInt count;
    try {
      count = BigInt(count_text);
    } catch (const std::exception&) {
      throw ParseError("invalid count '" + count_text + "'");
    }
    if (count < 0) throw ParseError("profile counts must be nonnegative");
    profile.sizes[static_cast<unsigned>(length)] += count;
  }
  if (!have_q) throw ParseError("missing 'q=<integer>' header line");
  return profile;
}

CodeSizeProfile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_profile(in);
}

}  // namespace noc
