#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modjamo/jamo.hpp"

namespace modjamo {

/// How input text is cut into matchable symbols. `chars` matches single
/// (lowercased) code points; `phonemes` matches whitespace-separated
/// phoneme names such as "TH" or "IY".
enum class SymbolMode { chars, phonemes };

struct PatternElement {
  enum class Kind { literal, char_class, boundary };
  Kind kind;
  std::string literal;          // Kind::literal
  std::size_t class_index = 0;  // Kind::char_class
};

using Pattern = std::vector<PatternElement>;

struct RuleGuard {
  std::string option;
  std::string value;
};

struct RewriteRule {
  Pattern left;
  Pattern match;  // never empty; never contains a boundary
  Pattern right;
  std::vector<JamoToken> output;
  std::optional<RuleGuard> guard;
  std::size_t line = 0;
};

/// Ordered context-sensitive rewrite rules for one language profile.
/// Immutable once loaded; option changes produce a new RuleSet.
class RuleSet {
 public:
  const LanguageProfile& profile() const noexcept { return profile_; }
  const std::string& id() const noexcept { return profile_.id; }
  SymbolMode mode() const noexcept { return mode_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const std::map<std::string, std::string>& options() const noexcept { return options_; }

  std::vector<std::string> class_names() const;
  const std::set<std::string>& class_members(std::size_t index) const { return classes_.at(index); }
  const std::set<std::string>* find_class(std::string_view name) const;

  /// Throws RuleError for an unknown option or value.
  RuleSet with_option(std::string_view name, std::string_view value) const;

  /// Consonants allowed to close a syllable; nullopt allows all.
  const std::optional<std::set<std::string>>& codas() const noexcept { return codas_; }

  /// Every token name any rule can emit.
  std::set<std::string> output_alphabet() const;

 private:
  friend RuleSet load_ruleset(std::string_view source);

  LanguageProfile profile_;
  SymbolMode mode_ = SymbolMode::chars;
  std::vector<std::string> class_order_;
  std::map<std::string, std::size_t, std::less<>> class_index_;
  std::vector<std::set<std::string>> classes_;
  std::vector<RewriteRule> rules_;
  std::map<std::string, std::string> options_;
  std::optional<std::set<std::string>> codas_;
};

/// Known options with their allowed values; the first value is the default.
const std::map<std::string, std::vector<std::string>>& known_options();

/// Rule file format, one directive per line, `;` starts a comment:
///   profile ID
///   symbols chars|phonemes
///   class NAME = members...       (before any rule)
///   codas TOKEN...                (consonants that may close a syllable)
///   sound TOKEN = description
///   [@option=value] LEFT | MATCH | RIGHT -> TOKENS
/// `#` in a context is a word-boundary anchor.
RuleSet load_ruleset(std::string_view source);

struct InputSymbol {
  std::string text;  // case-folded symbol
  std::size_t offset;
  std::size_t length;
  bool separator;
};

std::vector<InputSymbol> scan_input(std::string_view text, SymbolMode mode);

struct RuleMatch {
  std::size_t begin;  // symbol index range consumed
  std::size_t end;
  std::vector<JamoToken> output;
  std::size_t rule_index;
  std::size_t line;
};

/// One transliteration step: the first rule in file order whose match and
/// contexts apply at `pos`. Returns nullopt at the end of input, on a
/// separator, or when no rule applies.
std::optional<RuleMatch> apply_rule_once(std::span<const InputSymbol> symbols, std::size_t pos,
                                         const RuleSet& rules);

struct TraceStep {
  std::size_t offset;  // byte offset of the consumed span
  std::size_t length;  // byte length of the consumed span
  std::size_t line;    // rule line that fired
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Transliteration {
  std::vector<std::vector<JamoToken>> words;
  std::vector<TraceStep> trace;
};

/// Left-to-right scan; separators close words. Throws NoRuleMatched.
Transliteration transliterate(std::string_view text, const RuleSet& rules);

/// Completes syllables (honouring the rule set's codas) and composes each
/// word into blocks.
BlockText to_blocks(const Transliteration& result, const RuleSet& rules);

}  // namespace modjamo
