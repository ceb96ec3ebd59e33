#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace modjamo::utf8 {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first code unit
  std::size_t length;  // number of code units
};

// Throws SyntaxError on malformed input.
std::vector<CodePoint> decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);

// Simple lowercase mapping for Latin-1, Latin Extended-A, Greek and Cyrillic.
char32_t to_lower(char32_t cp);

bool is_space(char32_t cp);
// Sentence punctuation that separates words (ASCII, general punctuation, CJK).
bool is_word_separator(char32_t cp);

}  // namespace modjamo::utf8
