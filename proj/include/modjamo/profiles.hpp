#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modjamo/jamo.hpp"
#include "modjamo/rules.hpp"

namespace modjamo {

using OptionMap = std::map<std::string, std::string>;

/// Profiles compiled into the library: the rule-file languages plus the
/// built-in pinyin transducer ("zh").
std::vector<std::string> shipped_profiles();
bool is_pinyin_profile(std::string_view id);

/// Source text of a shipped rule file. Throws Error for unknown ids and zh.
std::string_view shipped_rules_source(std::string_view id);
const RuleSet& shipped_ruleset(std::string_view id);
std::string_view shipped_layout_source();

const LanguageProfile& profile_info(std::string_view id);

/// Token names a profile can produce, plus "@toneN" for toned profiles.
std::set<std::string> profile_alphabet(std::string_view id);

struct ProfileResult {
  BlockText blocks;
  std::vector<TraceStep> trace;  // empty for pinyin
};

/// End-to-end transliteration with a shipped profile. `rules` overrides
/// the shipped rule file when non-null.
ProfileResult transliterate_with_profile(std::string_view profile, std::string_view text,
                                         const OptionMap& options = {},
                                         const RuleSet* rules = nullptr);

}  // namespace modjamo
