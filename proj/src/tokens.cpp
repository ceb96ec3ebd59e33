#include <array>

#include "modjamo/error.hpp"
#include "modjamo/jamo.hpp"
#include "modjamo/utf8.hpp"

namespace modjamo {

namespace {

constexpr std::string_view kWordSep = " / ";
constexpr std::string_view kBlockSep = " . ";

// Splits on an exact separator, reporting piece offsets relative to `base`.
std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s,
                                                            std::string_view sep,
                                                            std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start), base + start);
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start), base + start);
    start = pos + sep.size();
  }
}

JamoToken parse_part(std::string_view part, std::size_t offset, Role role) {
  if (part.empty()) throw SyntaxError("empty token", offset);
  for (std::size_t i = 0; i < part.size(); ++i) {
    const char c = part[i];
    const bool ok = (c >= 'A' && c <= 'Z') || c == '*' || c == '^' || c == '_';
    if (!ok) throw SyntaxError(std::string("unexpected character '") + c + "'", offset + i);
  }
  try {
    return JamoToken::parse(part, role);
  } catch (const TokenError& e) {
    throw SyntaxError(e.what(), offset);
  }
}

SyllableBlock parse_block(std::string_view text, std::size_t offset) {
  int tone = 0;
  if (!text.empty() && text.back() >= '0' && text.back() <= '9') {
    tone = text.back() - '0';
    if (tone < 1 || tone > 5) throw SyntaxError("tone must be 1..5", offset + text.size() - 1);
    text.remove_suffix(1);
  }
  const auto parts = split(text, "+", offset);
  if (parts.size() < 2 || parts.size() > 3)
    throw SyntaxError("block must be ONSET+NUCLEUS[+CODA]", offset);
  const auto onset = parse_part(parts[0].first, parts[0].second, Role::onset);
  const auto nucleus = parse_part(parts[1].first, parts[1].second, Role::coda);
  std::optional<JamoToken> coda;
  if (parts.size() == 3) coda = parse_part(parts[2].first, parts[2].second, Role::coda);
  if (!onset.is_consonant()) throw SyntaxError("onset must be a consonant", parts[0].second);
  if (!nucleus.is_vowel()) throw SyntaxError("nucleus must be a vowel", parts[1].second);
  if (coda && !coda->is_consonant()) throw SyntaxError("coda must be a consonant", parts[2].second);
  return SyllableBlock(onset, nucleus, coda, tone);
}

}  // namespace

BlockText parse_tokens(std::string_view text) {
  BlockText out;
  if (text.empty()) return out;
  for (const auto& [word_text, word_off] : split(text, kWordSep, 0)) {
    Word word;
    for (const auto& [block_text, block_off] : split(word_text, kBlockSep, word_off))
      word.push_back(parse_block(block_text, block_off));
    out.push_back(std::move(word));
  }
  return out;
}

std::string serialize_block(const SyllableBlock& b) {
  std::string s = b.onset().name();
  s += '+';
  s += b.nucleus().name();
  if (b.coda()) {
    s += '+';
    s += b.coda()->name();
  }
  if (b.tone() != 0) s += static_cast<char>('0' + b.tone());
  return s;
}

std::string serialize_tokens(const BlockText& text) {
  std::string out;
  for (std::size_t w = 0; w < text.size(); ++w) {
    if (text[w].empty()) throw TokenError("cannot serialize an empty word");
    if (w) out += kWordSep;
    for (std::size_t i = 0; i < text[w].size(); ++i) {
      if (i) out += kBlockSep;
      out += serialize_block(text[w][i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Jongseong index per consonant; fortis stops without a final form fall back
// to their plain counterpart.
constexpr std::array<int, kConsonantCount> kCodaIndex = {
    1, 2, 4, 7, 7, 8, 16, 17, 17, 19, 20, 21, 22, 22, 23, 24, 25, 26, 27,
};

bool coda_is_lossy(Jamo j) { return j == Jamo::DD || j == Jamo::BB || j == Jamo::JJ; }

char32_t precomposed(const SyllableBlock& b) {
  const int lead = static_cast<int>(b.onset().base());
  const Jamo v = b.nucleus().base() == Jamo::SIL ? Jamo::EU : b.nucleus().base();
  const int vowel = static_cast<int>(v) - kConsonantCount;
  const int tail = b.coda() ? kCodaIndex[static_cast<std::size_t>(b.coda()->base())] : 0;
  return static_cast<char32_t>(0xAC00 + (lead * 21 + vowel) * 28 + tail);
}

std::string annotation(const SyllableBlock& b) {
  std::vector<std::string> notes;
  const auto note = [&](const JamoToken& t) {
    if (!t.is_plain() || t.base() == Jamo::SIL) notes.push_back(t.name());
  };
  note(b.onset());
  note(b.nucleus());
  if (b.coda()) {
    if (!b.coda()->is_plain() || coda_is_lossy(b.coda()->base())) notes.push_back(b.coda()->name());
  }
  if (b.tone() != 0) notes.push_back(std::to_string(b.tone()));
  if (notes.empty()) return {};
  std::string s = "(";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) s += ',';
    s += notes[i];
  }
  return s + ")";
}

}  // namespace

DisplayText to_display_text(const BlockText& text, DisplayPolicy policy) {
  std::string out;
  for (std::size_t w = 0; w < text.size(); ++w) {
    if (w) out += ' ';
    for (const auto& b : text[w]) {
      utf8::append(out, precomposed(b));
      if (policy == DisplayPolicy::marked) out += annotation(b);
    }
  }
  return {std::move(out), policy};
}

std::string_view policy_name(DisplayPolicy policy) {
  return policy == DisplayPolicy::plain ? "plain" : "marked";
}

DisplayPolicy policy_from_name(std::string_view name) {
  if (name == "plain") return DisplayPolicy::plain;
  if (name == "marked") return DisplayPolicy::marked;
  throw Error("unknown display policy '" + std::string(name) + "'");
}

}  // namespace modjamo
