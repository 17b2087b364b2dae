#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// Word file: one word per line, symbols separated by spaces. Lines whose
/// first non-blank character is '#' are comments; blank lines are skipped.
/// Throws Error(ParseError) on a malformed symbol, reporting the line.
std::vector<Word> read_words(std::istream& in);

/// First word of a word file. Throws Error(ParseError) if there is none.
Word read_word(std::istream& in);

void write_word(std::ostream& out, const Word& w);

}  // namespace wordrep
