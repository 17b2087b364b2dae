#include "wordrep/word_io.hpp"

#include <string>

#include "wordrep/error.hpp"

namespace wordrep {

std::vector<Word> read_words(std::istream& in) {
  std::vector<Word> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(Word::parse(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Word read_word(std::istream& in) {
  auto words = read_words(in);
  if (words.empty()) throw Error(ErrorKind::ParseError, "no word found in input");
  return std::move(words.front());
}

void write_word(std::ostream& out, const Word& w) { out << w.to_string() << '\n'; }

}  // namespace wordrep
