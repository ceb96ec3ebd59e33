#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modjamo/jamo.hpp"

namespace modjamo {

/// One pinyin syllable. `final` keeps the written spelling (including the
/// y/w spellings such as "you" or "wo"); ü is normalized to 'v'.
struct PinyinSyllable {
  std::string initial;  // one of the 21 initials, or empty
  std::string final;
  int tone = 5;         // 1..4, 5 = neutral
  friend bool operator==(const PinyinSyllable&, const PinyinSyllable&) = default;
};

/// The 21 initials in table order (b p m f d t n l g k h j q x zh ch sh r z c s).
std::span<const std::string_view> pinyin_initials();
JamoToken pinyin_initial_token(std::string_view initial);

/// Segments pinyin with tone diacritics or trailing tone digits. Whitespace
/// and apostrophes separate syllables; sentence punctuation and "/"
/// separate words. Untoned syllables get tone 5. Throws SyntaxError.
std::vector<std::vector<PinyinSyllable>> segment_pinyin_words(std::string_view text);
std::vector<PinyinSyllable> segment_pinyin(std::string_view text);

/// Maps each syllable through the initial table and the finals table; every
/// block of a syllable carries the syllable's tone.
std::vector<SyllableBlock> transliterate_pinyin(std::span<const PinyinSyllable> syllables);
BlockText transliterate_pinyin_text(std::string_view text);

const LanguageProfile& pinyin_profile();
std::set<std::string> pinyin_output_alphabet();

}  // namespace modjamo
