#include "modjamo/pinyin.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "modjamo/error.hpp"
#include "modjamo/utf8.hpp"

namespace modjamo {

namespace {

struct InitialRow {
  std::string_view initial;
  Jamo base;
  bool modified;
};

// Retroflex initials (zh ch sh r) and f take modified jamo; everything else
// maps to a plain jamo.
constexpr std::array<InitialRow, 21> kInitials = {{
    {"b", Jamo::BB, false}, {"p", Jamo::P, false},  {"m", Jamo::M, false},
    {"f", Jamo::P, true},   {"d", Jamo::D, false},  {"t", Jamo::T, false},
    {"n", Jamo::N, false},  {"l", Jamo::R, false},  {"g", Jamo::G, false},
    {"k", Jamo::K, false},  {"h", Jamo::H, false},  {"j", Jamo::J, false},
    {"q", Jamo::CH, false}, {"x", Jamo::S, false},  {"zh", Jamo::J, true},
    {"ch", Jamo::CH, true}, {"sh", Jamo::S, true},  {"r", Jamo::R, true},
    {"z", Jamo::J, false},  {"c", Jamo::CH, false}, {"s", Jamo::SS, false},
}};

constexpr std::array<std::string_view, 21> kInitialNames = {
    "b", "p", "m", "f", "d", "t", "n", "l", "g", "k", "h",
    "j", "q", "x", "zh", "ch", "sh", "r", "z", "c", "s",
};

// Finals as written, mapped to vowel/coda tokens. Null onsets are added by
// syllable completion.
const std::map<std::string, std::string, std::less<>>& finals_table() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"a", "A"},       {"o", "O"},       {"e", "EO"},      {"ai", "A I"},
      {"ei", "AE I"},   {"ao", "A O"},    {"ou", "O U"},    {"an", "A N"},
      {"en", "EO N"},   {"ang", "A NG"},  {"eng", "EO NG"}, {"ong", "O NG"},
      {"er", "A^"},     {"i", "I"},       {"ia", "YA"},     {"ie", "I E"},
      {"iao", "YA O"},  {"iu", "I O U"},  {"ian", "YE N"},  {"in", "I N"},
      {"iang", "YA NG"}, {"ing", "I NG"}, {"iong", "YO NG"}, {"u", "U"},
      {"ua", "WA"},     {"uo", "U O"},    {"uai", "WA I"},  {"ui", "U I"},
      {"uan", "WA N"},  {"un", "U N"},    {"uang", "WA NG"}, {"ue", "WI E"},
      {"v", "WI"},      {"ve", "WI E"},   {"van", "WI E N"}, {"vn", "WI N"},
      {"yi", "I"},      {"ya", "YA"},     {"yo", "YO"},     {"ye", "YE"},
      {"yao", "YA O"},  {"you", "YO U"},  {"yan", "YE N"},  {"yin", "I N"},
      {"yang", "YA NG"}, {"ying", "I NG"}, {"yong", "YO NG"}, {"yu", "WI"},
      {"yue", "WI E"},  {"yuan", "WI E N"}, {"yun", "WI N"}, {"wu", "U"},
      {"wa", "WA"},     {"wo", "WO"},     {"wai", "WA I"},  {"wei", "WE I"},
      {"wan", "WA N"},  {"wen", "WO N"},  {"wang", "WA NG"}, {"weng", "WO NG"},
  };
  return table;
}

// After j, q and x a written u is ü.
const std::map<std::string, std::string, std::less<>>& palatal_u_finals() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"u", "WI"}, {"ue", "WI E"}, {"uan", "WI E N"}, {"un", "WI N"},
  };
  return table;
}

std::vector<std::string> finals_by_length() {
  std::vector<std::string> v;
  for (const auto& [k, _] : finals_table()) v.push_back(k);
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return v;
}

bool is_apical_initial(std::string_view i) {
  return i == "z" || i == "c" || i == "s" || i == "zh" || i == "ch" || i == "sh" || i == "r";
}

struct Letter {
  char base;  // a-z, 'v' for ü, or a tone digit
  int tone;   // 0 when the letter carries no diacritic
};

std::optional<Letter> classify(char32_t cp) {
  cp = utf8::to_lower(cp);
  if (cp >= U'a' && cp <= U'z') return Letter{static_cast<char>(cp), 0};
  if (cp >= U'0' && cp <= U'9') return Letter{static_cast<char>(cp), 0};
  switch (cp) {
    case 0x101: return Letter{'a', 1}; case 0xE1: return Letter{'a', 2};
    case 0x1CE: case 0x1CD: return Letter{'a', 3}; case 0xE0: return Letter{'a', 4};
    case 0x113: return Letter{'e', 1}; case 0xE9: return Letter{'e', 2};
    case 0x11B: return Letter{'e', 3}; case 0xE8: return Letter{'e', 4};
    case 0x12B: return Letter{'i', 1}; case 0xED: return Letter{'i', 2};
    case 0x1D0: case 0x1CF: return Letter{'i', 3}; case 0xEC: return Letter{'i', 4};
    case 0x14D: return Letter{'o', 1}; case 0xF3: return Letter{'o', 2};
    case 0x1D2: case 0x1D1: return Letter{'o', 3}; case 0xF2: return Letter{'o', 4};
    case 0x16B: return Letter{'u', 1}; case 0xFA: return Letter{'u', 2};
    case 0x1D4: case 0x1D3: return Letter{'u', 3}; case 0xF9: return Letter{'u', 4};
    case 0xFC: return Letter{'v', 0};
    case 0x1D6: case 0x1D5: return Letter{'v', 1}; case 0x1D8: case 0x1D7: return Letter{'v', 2};
    case 0x1DA: case 0x1D9: return Letter{'v', 3}; case 0x1DC: case 0x1DB: return Letter{'v', 4};
    default: return std::nullopt;
  }
}

bool is_syllable_separator(char32_t cp) {
  return utf8::is_space(cp) || cp == U'\'' || cp == 0x2019;
}

class RunSegmenter {
 public:
  RunSegmenter(std::vector<Letter> letters) : letters_(std::move(letters)) {
    failed_.assign(letters_.size() + 1, false);
  }

  std::optional<std::vector<PinyinSyllable>> run() { return segment(0); }

 private:
  bool starts_with(std::size_t pos, std::string_view s) const {
    if (pos + s.size() > letters_.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (letters_[pos + i].base != s[i]) return false;
    return true;
  }

  std::optional<std::vector<PinyinSyllable>> segment(std::size_t pos) {
    if (pos == letters_.size()) return std::vector<PinyinSyllable>{};
    if (failed_[pos]) return std::nullopt;
    static const auto finals = finals_by_length();
    static const std::array<std::string_view, 22> initials = {
        "zh", "ch", "sh", "b", "p", "m", "f", "d", "t", "n", "l",
        "g",  "k",  "h",  "j", "q", "x", "r", "z", "c", "s", ""};
    for (const auto initial : initials) {
      if (!starts_with(pos, initial)) continue;
      const std::size_t fpos = pos + initial.size();
      for (const auto& fin : finals) {
        if (!starts_with(fpos, fin)) continue;
        const bool glide_spelling = fin[0] == 'y' || fin[0] == 'w';
        if (!initial.empty() && glide_spelling) continue;
        if (initial.empty() && !glide_spelling) {
          // A bare vowel-initial syllable needs an apostrophe unless it
          // starts the run, and only a/o/e may start one.
          if (pos != 0 || (fin[0] != 'a' && fin[0] != 'o' && fin[0] != 'e')) continue;
        }
        std::size_t end = fpos + fin.size();
        int tone = 0;
        bool bad = false;
        for (std::size_t i = pos; i < end; ++i) {
          if (letters_[i].tone == 0) continue;
          if (tone != 0) bad = true;
          tone = letters_[i].tone;
        }
        if (end < letters_.size() && letters_[end].base >= '0' && letters_[end].base <= '9') {
          const int digit = letters_[end].base - '0';
          if (digit < 1 || digit > 5 || (tone != 0 && tone != digit)) bad = true;
          tone = digit;
          ++end;
        }
        if (bad) continue;
        auto rest = segment(end);
        if (!rest) continue;
        rest->insert(rest->begin(), PinyinSyllable{std::string(initial), fin, tone ? tone : 5});
        return rest;
      }
    }
    failed_[pos] = true;
    return std::nullopt;
  }

  std::vector<Letter> letters_;
  std::vector<bool> failed_;
};

std::vector<JamoToken> final_tokens(std::string_view initial, std::string_view fin) {
  std::string spelled;
  if (fin == "i" && is_apical_initial(initial)) {
    spelled = "EU";
  } else if ((initial == "j" || initial == "q" || initial == "x") &&
             palatal_u_finals().count(fin)) {
    spelled = palatal_u_finals().find(fin)->second;
  } else if (const auto it = finals_table().find(fin); it != finals_table().end()) {
    spelled = it->second;
  } else {
    throw Error("unknown pinyin final '" + std::string(fin) + "'");
  }
  std::vector<JamoToken> out;
  std::size_t start = 0;
  while (start < spelled.size()) {
    auto sp = spelled.find(' ', start);
    if (sp == std::string::npos) sp = spelled.size();
    out.push_back(JamoToken::parse(std::string_view(spelled).substr(start, sp - start)));
    start = sp + 1;
  }
  return out;
}

}  // namespace

std::span<const std::string_view> pinyin_initials() { return kInitialNames; }

JamoToken pinyin_initial_token(std::string_view initial) {
  for (const auto& row : kInitials)
    if (row.initial == initial) return JamoToken::consonant(row.base, row.modified);
  throw Error("unknown pinyin initial '" + std::string(initial) + "'");
}

std::vector<std::vector<PinyinSyllable>> segment_pinyin_words(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::vector<std::vector<PinyinSyllable>> words;
  std::vector<PinyinSyllable> word;
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i].value;
    if (is_syllable_separator(cp)) {
      ++i;
      continue;
    }
    if (utf8::is_word_separator(cp)) {
      if (!word.empty()) words.push_back(std::move(word));
      word.clear();
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    std::vector<Letter> letters;
    while (i < cps.size() && !utf8::is_word_separator(cps[i].value)) {
      const auto letter = classify(cps[i].value);
      if (!letter) throw SyntaxError("not a pinyin letter", cps[i].offset);
      letters.push_back(*letter);
      ++i;
    }
    RunSegmenter seg(std::move(letters));
    auto syllables = seg.run();
    if (!syllables) throw SyntaxError("unsegmentable pinyin", cps[run_start].offset);
    word.insert(word.end(), syllables->begin(), syllables->end());
  }
  if (!word.empty()) words.push_back(std::move(word));
  return words;
}

std::vector<PinyinSyllable> segment_pinyin(std::string_view text) {
  std::vector<PinyinSyllable> flat;
  for (auto& w : segment_pinyin_words(text)) flat.insert(flat.end(), w.begin(), w.end());
  return flat;
}

std::vector<SyllableBlock> transliterate_pinyin(std::span<const PinyinSyllable> syllables) {
  std::vector<SyllableBlock> out;
  for (const auto& syl : syllables) {
    if (syl.tone < 1 || syl.tone > 5) throw Error("pinyin tone must be 1..5");
    std::vector<JamoToken> stream;
    if (!syl.initial.empty()) stream.push_back(pinyin_initial_token(syl.initial));
    const auto fin = final_tokens(syl.initial, syl.final);
    stream.insert(stream.end(), fin.begin(), fin.end());
    const auto completed = complete_syllables(stream);
    for (const auto& b : compose(std::span<const JamoToken>(completed)))
      out.push_back(b.with_tone(syl.tone));
  }
  return out;
}

BlockText transliterate_pinyin_text(std::string_view text) {
  BlockText out;
  for (const auto& word : segment_pinyin_words(text)) out.push_back(transliterate_pinyin(word));
  return out;
}

const LanguageProfile& pinyin_profile() {
  static const LanguageProfile profile{
      "zh",
      {{"J*", "zh (retroflex)"},
       {"CH*", "ch (retroflex)"},
       {"S*", "sh (retroflex)"},
       {"R*", "r (retroflex)"},
       {"P*", "f"},
       {"A^", "er (rhotic)"}},
  };
  return profile;
}

std::set<std::string> pinyin_output_alphabet() {
  std::set<std::string> out{"NG"};
  for (const auto& row : kInitials) out.insert(JamoToken::consonant(row.base, row.modified).name());
  const auto add = [&](const std::string& spelled) {
    std::size_t start = 0;
    while (start < spelled.size()) {
      auto sp = spelled.find(' ', start);
      if (sp == std::string::npos) sp = spelled.size();
      out.insert(spelled.substr(start, sp - start));
      start = sp + 1;
    }
  };
  for (const auto& [_, v] : finals_table()) add(v);
  for (const auto& [_, v] : palatal_u_finals()) add(v);
  out.insert("EU");
  return out;
}

}  // namespace modjamo
