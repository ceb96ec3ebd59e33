#include "modjamo/jamo.hpp"

#include <array>

#include "modjamo/error.hpp"

namespace modjamo {

namespace {

constexpr std::array<std::string_view, kJamoCount> kNames = {
    "G",  "GG", "N",  "D",   "DD", "R",  "M",   "B",  "BB", "S",  "SS", "NG", "J",  "JJ",
    "CH", "K",  "T",  "P",   "H",  "A",  "AE",  "YA", "YAE", "EO", "E", "YEO", "YE", "O",
    "WA", "WAE", "OE", "YO", "U",  "WO", "WE",  "WI", "YU", "EU", "UI", "I",  "SIL",
};

constexpr std::array<Jamo, kJamoCount> make_all() {
  std::array<Jamo, kJamoCount> a{};
  for (int i = 0; i < kJamoCount; ++i) a[i] = static_cast<Jamo>(i);
  return a;
}
constexpr auto kAll = make_all();

}  // namespace

std::string_view jamo_name(Jamo j) { return kNames[static_cast<std::size_t>(j)]; }

std::optional<Jamo> jamo_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Jamo>(i);
  return std::nullopt;
}

std::span<const Jamo> all_jamo() { return kAll; }

// ---------------------------------------------------------------------------

JamoToken::JamoToken(Jamo base, Role role, Modifier modifier)
    : base_(base), role_(role), modifier_(modifier) {
  const auto name = std::string(jamo_name(base));
  if (modjamo::is_vowel(base) != (role == Role::nucleus))
    throw TokenError(name + ": nucleus role is reserved for vowels");
  if (modifier == Modifier::modified && !is_modifiable(base))
    throw TokenError(name + " has no modified form");
  if (modifier == Modifier::rhotic && (role != Role::nucleus || base == Jamo::SIL))
    throw TokenError(name + " cannot be rhotic");
}

JamoToken JamoToken::consonant(Jamo base, bool modified, Role role) {
  return JamoToken(base, role, modified ? Modifier::modified : Modifier::plain);
}

JamoToken JamoToken::vowel(Jamo base, bool rhotic) {
  return JamoToken(base, Role::nucleus, rhotic ? Modifier::rhotic : Modifier::plain);
}

JamoToken JamoToken::parse(std::string_view name, Role consonant_role) {
  if (name == "_") return vowel(Jamo::SIL);
  Modifier mod = Modifier::plain;
  if (!name.empty() && name.back() == '*') {
    mod = Modifier::modified;
    name.remove_suffix(1);
  } else if (!name.empty() && name.back() == '^') {
    mod = Modifier::rhotic;
    name.remove_suffix(1);
  }
  const auto base = jamo_from_name(name);
  // SIL is spelled "_" only.
  if (!base || *base == Jamo::SIL) throw TokenError("unknown token name '" + std::string(name) + "'");
  if (modjamo::is_vowel(*base)) {
    if (mod == Modifier::modified) throw TokenError(std::string(name) + " is a vowel; use ^");
    return JamoToken(*base, Role::nucleus, mod);
  }
  if (mod == Modifier::rhotic) throw TokenError(std::string(name) + " is a consonant; use *");
  return JamoToken(*base, consonant_role, mod);
}

JamoToken JamoToken::with_role(Role role) const { return JamoToken(base_, role, modifier_); }

JamoToken JamoToken::with_modifier(Modifier modifier) const {
  return JamoToken(base_, role_, modifier);
}

std::string JamoToken::name() const {
  if (base_ == Jamo::SIL) return "_";
  std::string s(jamo_name(base_));
  if (modifier_ == Modifier::modified) s += '*';
  if (modifier_ == Modifier::rhotic) s += '^';
  return s;
}

// ---------------------------------------------------------------------------

SyllableBlock::SyllableBlock(JamoToken onset, JamoToken nucleus, std::optional<JamoToken> coda,
                             int tone)
    : onset_(onset), nucleus_(nucleus), coda_(coda), tone_(tone) {
  if (!onset.is_consonant()) throw TokenError("block onset must be a consonant");
  if (!nucleus.is_vowel()) throw TokenError("block nucleus must be a vowel");
  if (coda && !coda->is_consonant()) throw TokenError("block coda must be a consonant");
  if (tone < 0 || tone > 5) throw TokenError("tone must be in 0..5");
  onset_ = onset.with_role(Role::onset);
  if (coda_) coda_ = coda_->with_role(Role::coda);
}

SyllableBlock SyllableBlock::with_tone(int tone) const {
  return SyllableBlock(onset_, nucleus_, coda_, tone);
}

bool SyllableBlock::has_modifier() const noexcept {
  return !onset_.is_plain() || !nucleus_.is_plain() || (coda_ && !coda_->is_plain());
}

// ---------------------------------------------------------------------------

std::vector<SyllableBlock> compose(std::span<const JamoSymbol> stream) {
  const auto token_at = [&](std::size_t i) -> const JamoToken* {
    return i < stream.size() ? std::get_if<JamoToken>(&stream[i]) : nullptr;
  };
  const auto vowel_at = [&](std::size_t i) {
    const auto* t = token_at(i);
    return t && t->is_vowel();
  };

  std::vector<SyllableBlock> blocks;
  std::size_t i = 0;
  while (i < stream.size()) {
    const auto* onset = token_at(i);
    if (!onset) throw ComposeError("tone mark without a block", i);
    if (onset->is_vowel()) throw ComposeError("vowel without an onset", i);
    const auto* nucleus = token_at(i + 1);
    if (!nucleus || !nucleus->is_vowel()) throw ComposeError("onset without a vowel", i);
    std::optional<JamoToken> coda;
    i += 2;
    if (const auto* t = token_at(i); t && t->is_consonant() && !vowel_at(i + 1)) {
      coda = t->with_role(Role::coda);
      ++i;
    }
    int tone = 0;
    if (i < stream.size()) {
      if (const auto* mark = std::get_if<ToneMark>(&stream[i])) {
        if (mark->tone < 1 || mark->tone > 5) throw ComposeError("tone out of range", i);
        tone = mark->tone;
        ++i;
      }
    }
    blocks.emplace_back(*onset, *nucleus, coda, tone);
  }
  return blocks;
}

std::vector<SyllableBlock> compose(std::span<const JamoToken> stream) {
  std::vector<JamoSymbol> symbols(stream.begin(), stream.end());
  return compose(std::span<const JamoSymbol>(symbols));
}

std::vector<JamoSymbol> decompose(std::span<const SyllableBlock> blocks) {
  std::vector<JamoSymbol> out;
  out.reserve(blocks.size() * 3);
  for (const auto& b : blocks) {
    out.emplace_back(b.onset());
    out.emplace_back(b.nucleus());
    if (b.coda()) out.emplace_back(*b.coda());
    if (b.tone() != 0) out.emplace_back(ToneMark{b.tone()});
  }
  return out;
}

std::vector<JamoToken> complete_syllables(std::span<const JamoToken> stream,
                                          const std::set<std::string>* allowed_codas) {
  enum class State { closed, onset, nucleus };
  const JamoToken null_onset = JamoToken::consonant(Jamo::NG);
  const JamoToken silent = JamoToken::vowel(Jamo::SIL);

  std::vector<JamoToken> out;
  out.reserve(stream.size() * 2);
  State state = State::closed;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto& t = stream[i];
    if (t.is_vowel()) {
      if (state != State::onset) out.push_back(null_onset);
      out.push_back(t);
      state = State::nucleus;
      continue;
    }
    if (state == State::onset) {
      out.push_back(silent);
      state = State::closed;
    }
    const bool vowel_next = i + 1 < stream.size() && stream[i + 1].is_vowel();
    out.push_back(t.with_role(Role::onset));
    if (state == State::nucleus && !vowel_next) {
      if (allowed_codas && !allowed_codas->count(t.name())) out.push_back(silent);
      state = State::closed;
    } else {
      state = State::onset;
    }
  }
  if (state == State::onset) out.push_back(silent);
  return out;
}

}  // namespace modjamo
