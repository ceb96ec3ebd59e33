#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modjamo {

/// Extended jamo inventory. Consonants come first in standard choseong
/// order, then vowels in standard jungseong order, then the silent vowel.
enum class Jamo : std::uint8_t {
  G, GG, N, D, DD, R, M, B, BB, S, SS, NG, J, JJ, CH, K, T, P, H,
  A, AE, YA, YAE, EO, E, YEO, YE, O, WA, WAE, OE, YO, U, WO, WE, WI, YU, EU, UI, I,
  SIL,
};

inline constexpr int kConsonantCount = 19;
inline constexpr int kVowelCount = 22;  // including SIL
inline constexpr int kJamoCount = kConsonantCount + kVowelCount;

constexpr bool is_consonant(Jamo j) { return static_cast<int>(j) < kConsonantCount; }
constexpr bool is_vowel(Jamo j) { return !is_consonant(j); }

/// Bases that have a modified (swollen-stroke) variant.
constexpr bool is_modifiable(Jamo j) {
  switch (j) {
    case Jamo::D: case Jamo::R: case Jamo::B: case Jamo::S: case Jamo::NG:
    case Jamo::K: case Jamo::P: case Jamo::H: case Jamo::J: case Jamo::CH:
      return true;
    default:
      return false;
  }
}

std::string_view jamo_name(Jamo j);
std::optional<Jamo> jamo_from_name(std::string_view name);
std::span<const Jamo> all_jamo();

enum class Role : std::uint8_t { onset, nucleus, coda };
enum class Modifier : std::uint8_t { plain, modified, rhotic };

/// One extended-jamo unit. Construction validates the inventory rules,
/// so every live token is well formed.
class JamoToken {
 public:
  JamoToken(Jamo base, Role role, Modifier modifier = Modifier::plain);

  static JamoToken consonant(Jamo base, bool modified = false, Role role = Role::onset);
  static JamoToken vowel(Jamo base, bool rhotic = false);
  /// Parses "B", "B*", "A^", "_" (SIL). Consonants get `consonant_role`.
  static JamoToken parse(std::string_view name, Role consonant_role = Role::onset);

  Jamo base() const noexcept { return base_; }
  Role role() const noexcept { return role_; }
  Modifier modifier() const noexcept { return modifier_; }
  bool is_vowel() const noexcept { return modjamo::is_vowel(base_); }
  bool is_consonant() const noexcept { return modjamo::is_consonant(base_); }
  bool is_plain() const noexcept { return modifier_ == Modifier::plain; }

  JamoToken with_role(Role role) const;
  JamoToken with_modifier(Modifier modifier) const;

  /// Serialized name without role: "B*", "A^", "_".
  std::string name() const;

  friend bool operator==(const JamoToken&, const JamoToken&) = default;

 private:
  Jamo base_;
  Role role_;
  Modifier modifier_;
};

/// Onset + nucleus + optional coda, with tone 0 (untoned) or 1..5.
class SyllableBlock {
 public:
  SyllableBlock(JamoToken onset, JamoToken nucleus, std::optional<JamoToken> coda = std::nullopt,
                int tone = 0);

  const JamoToken& onset() const noexcept { return onset_; }
  const JamoToken& nucleus() const noexcept { return nucleus_; }
  const std::optional<JamoToken>& coda() const noexcept { return coda_; }
  int tone() const noexcept { return tone_; }

  SyllableBlock with_tone(int tone) const;
  bool has_modifier() const noexcept;

  friend bool operator==(const SyllableBlock&, const SyllableBlock&) = default;

 private:
  JamoToken onset_;
  JamoToken nucleus_;
  std::optional<JamoToken> coda_;
  int tone_;
};

using Word = std::vector<SyllableBlock>;
/// Whitespace-separated words of blocks; the unit of serialization.
using BlockText = std::vector<Word>;

struct ToneMark {
  int tone;
  friend bool operator==(const ToneMark&, const ToneMark&) = default;
};

/// Element of a flat jamo stream. A tone mark terminates the block it follows.
using JamoSymbol = std::variant<JamoToken, ToneMark>;

/// Greedy syllable composition. A consonant after a nucleus becomes the
/// coda unless a vowel follows it. Throws ComposeError on an illegal stream.
std::vector<SyllableBlock> compose(std::span<const JamoSymbol> stream);
std::vector<SyllableBlock> compose(std::span<const JamoToken> stream);
std::vector<JamoSymbol> decompose(std::span<const SyllableBlock> blocks);

/// Makes a raw jamo stream composable: inserts the null onset NG before a
/// vowel that has no onset, and the silent vowel after a consonant that can
/// be neither an onset nor a coda. An inserted silent vowel closes its block.
/// When `allowed_codas` is given, other consonants never close a syllable
/// and get a silent vowel instead.
std::vector<JamoToken> complete_syllables(std::span<const JamoToken> stream,
                                          const std::set<std::string>* allowed_codas = nullptr);

/// Token serialization:
///   TEXT  := WORD (" / " WORD)*
///   WORD  := BLOCK (" . " BLOCK)*
///   BLOCK := ONSET "+" NUCLEUS ("+" CODA)? TONE?
BlockText parse_tokens(std::string_view text);
std::string serialize_tokens(const BlockText& text);
std::string serialize_block(const SyllableBlock& block);

enum class DisplayPolicy { plain, marked };

struct DisplayText {
  std::string text;
  DisplayPolicy policy;
};

/// Renders blocks as precomposed Hangul syllables using the base shapes.
/// `marked` appends "(B*,1)"-style notes to blocks that carry a modifier,
/// the silent vowel, or a tone.
DisplayText to_display_text(const BlockText& text, DisplayPolicy policy);
std::string_view policy_name(DisplayPolicy policy);
DisplayPolicy policy_from_name(std::string_view name);

/// Per-language meaning of modified tokens, keyed by token name ("B*").
struct LanguageProfile {
  std::string id;
  std::map<std::string, std::string> sounds;
};

}  // namespace modjamo
