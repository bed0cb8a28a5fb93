#pragma once

#include <iosfwd>
#include <string>

#include "noc/count.hpp"
#include "noc/words.hpp"

namespace noc {

// Code file format: first non-comment line `q=<integer>`, then one word per
// line. Words are digit strings for q <= 10 and comma-separated decimal
// symbols for q > 10. Blank lines and lines starting with '#' are ignored.

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

std::string format_word(const Word& w, const Alphabet& alphabet);
Word parse_word(const std::string& text, const Alphabet& alphabet);

// Profile file format: first non-comment line `q=<integer>`, then one
// `<length> <count>` pair per line. Same comment/blank-line rules.

CodeSizeProfile read_profile(std::istream& in);
CodeSizeProfile read_profile_file(const std::string& path);

}  // namespace noc
