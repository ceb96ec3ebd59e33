#include "modjamo/profiles.hpp"

#include <mutex>

#include "modjamo/error.hpp"
#include "modjamo/pinyin.hpp"
#include "shipped_data.hpp"

namespace modjamo {

std::vector<std::string> shipped_profiles() {
  std::vector<std::string> ids;
  for (const auto& f : shipped::rule_files()) ids.emplace_back(f.name);
  ids.emplace_back("zh");
  return ids;
}

bool is_pinyin_profile(std::string_view id) { return id == "zh"; }

std::string_view shipped_rules_source(std::string_view id) {
  for (const auto& f : shipped::rule_files())
    if (f.name == id) return f.data;
  throw Error("no shipped rule file for profile '" + std::string(id) + "'");
}

const RuleSet& shipped_ruleset(std::string_view id) {
  static std::mutex mutex;
  static std::map<std::string, RuleSet, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (const auto it = cache.find(id); it != cache.end()) return it->second;
  auto rs = load_ruleset(shipped_rules_source(id));
  return cache.emplace(std::string(id), std::move(rs)).first->second;
}

std::string_view shipped_layout_source() { return shipped::default_layout(); }

const LanguageProfile& profile_info(std::string_view id) {
  if (is_pinyin_profile(id)) return pinyin_profile();
  return shipped_ruleset(id).profile();
}

std::set<std::string> profile_alphabet(std::string_view id) {
  std::set<std::string> out;
  if (is_pinyin_profile(id)) {
    out = pinyin_output_alphabet();
    for (int t = 1; t <= 5; ++t) out.insert("@tone" + std::to_string(t));
    return out;
  }
  out = shipped_ruleset(id).output_alphabet();
  // Syllable completion may add these to any stream.
  out.insert("NG");
  out.insert("_");
  return out;
}

ProfileResult transliterate_with_profile(std::string_view profile, std::string_view text,
                                         const OptionMap& options, const RuleSet* rules) {
  if (is_pinyin_profile(profile) && !rules) {
    if (!options.empty()) throw Error("profile zh has no options");
    return {transliterate_pinyin_text(text), {}};
  }
  RuleSet rs = rules ? *rules : shipped_ruleset(profile);
  for (const auto& [k, v] : options) rs = rs.with_option(k, v);
  auto result = transliterate(text, rs);
  return {to_blocks(result, rs), std::move(result.trace)};
}

}  // namespace modjamo
