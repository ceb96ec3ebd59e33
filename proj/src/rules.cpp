#include "modjamo/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "modjamo/error.hpp"
#include "modjamo/utf8.hpp"

namespace modjamo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_class_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'A' && s[0] <= 'Z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string fold_phoneme(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  // ARPAbet stress digits: AA1 -> AA
  while (out.size() > 1 && out.back() >= '0' && out.back() <= '2') out.pop_back();
  return out;
}

std::vector<std::string> fold_chars(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& cp : utf8::decode(s)) out.push_back(utf8::encode(utf8::to_lower(cp.value)));
  return out;
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& known_options() {
  static const std::map<std::string, std::vector<std::string>> options = {
      {"spanish_variant", {"castilian", "latam"}},
      {"portuguese_variant", {"brazil", "portugal"}},
  };
  return options;
}

std::vector<std::string> RuleSet::class_names() const { return class_order_; }

const std::set<std::string>* RuleSet::find_class(std::string_view name) const {
  const auto it = class_index_.find(name);
  return it == class_index_.end() ? nullptr : &classes_[it->second];
}

RuleSet RuleSet::with_option(std::string_view name, std::string_view value) const {
  const auto& known = known_options();
  const auto it = known.find(std::string(name));
  if (it == known.end()) throw RuleError("unknown option '" + std::string(name) + "'", 0);
  if (std::find(it->second.begin(), it->second.end(), value) == it->second.end())
    throw RuleError("option " + std::string(name) + " has no value '" + std::string(value) + "'",
                    0);
  RuleSet copy = *this;
  copy.options_[std::string(name)] = std::string(value);
  return copy;
}

std::set<std::string> RuleSet::output_alphabet() const {
  std::set<std::string> out;
  for (const auto& r : rules_)
    for (const auto& t : r.output) out.insert(t.name());
  return out;
}

RuleSet load_ruleset(std::string_view source) {
  RuleSet rs;
  for (const auto& [name, values] : known_options()) rs.options_[name] = values.front();

  // Symbols usable as phoneme literals: the union of all class members.
  std::set<std::string> inventory;

  const auto parse_pattern = [&](std::string_view text, std::size_t line, bool is_match) {
    Pattern p;
    for (const auto& w : words_of(text)) {
      if (w == "#") {
        if (is_match) throw RuleError("word boundary inside MATCH", line);
        p.push_back({PatternElement::Kind::boundary, {}, 0});
        continue;
      }
      if (const auto it = rs.class_index_.find(w); it != rs.class_index_.end()) {
        p.push_back({PatternElement::Kind::char_class, {}, it->second});
        continue;
      }
      if (rs.mode_ == SymbolMode::phonemes) {
        const auto sym = fold_phoneme(w);
        if (!inventory.count(sym)) throw RuleError("undeclared class or symbol '" + w + "'", line);
        p.push_back({PatternElement::Kind::literal, sym, 0});
        continue;
      }
      if (is_class_name(w)) throw RuleError("undeclared class '" + w + "'", line);
      try {
        for (auto& sym : fold_chars(w)) p.push_back({PatternElement::Kind::literal, sym, 0});
      } catch (const SyntaxError& e) {
        throw RuleError(e.what(), line);
      }
    }
    return p;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto nl = source.find('\n', pos);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view raw = source.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto c = raw.find(';'); c != std::string_view::npos) raw = raw.substr(0, c);
    const auto line = trim(raw);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      const auto parts = words_of(line);
      const auto& kw = parts[0];
      if (kw == "profile") {
        if (parts.size() != 2) throw RuleError("expected 'profile ID'", line_no);
        rs.profile_.id = parts[1];
      } else if (kw == "symbols") {
        if (parts.size() != 2 || (parts[1] != "chars" && parts[1] != "phonemes"))
          throw RuleError("expected 'symbols chars|phonemes'", line_no);
        if (!rs.classes_.empty() || !rs.rules_.empty())
          throw RuleError("'symbols' must precede classes and rules", line_no);
        rs.mode_ = parts[1] == "chars" ? SymbolMode::chars : SymbolMode::phonemes;
      } else if (kw == "class") {
        if (parts.size() < 4 || parts[2] != "=") throw RuleError("expected 'class NAME = ...'", line_no);
        if (!rs.rules_.empty()) throw RuleError("class declared after the first rule", line_no);
        const auto& name = parts[1];
        if (!is_class_name(name)) throw RuleError("invalid class name '" + name + "'", line_no);
        if (rs.class_index_.count(name)) throw RuleError("duplicate class '" + name + "'", line_no);
        std::set<std::string> members;
        for (std::size_t i = 3; i < parts.size(); ++i) {
          if (rs.mode_ == SymbolMode::phonemes) {
            members.insert(fold_phoneme(parts[i]));
          } else {
            try {
              for (auto& s : fold_chars(parts[i])) members.insert(s);
            } catch (const SyntaxError& e) {
              throw RuleError(e.what(), line_no);
            }
          }
        }
        inventory.insert(members.begin(), members.end());
        rs.class_index_.emplace(name, rs.classes_.size());
        rs.class_order_.push_back(name);
        rs.classes_.push_back(std::move(members));
      } else if (kw == "codas") {
        std::set<std::string> codas;
        for (std::size_t i = 1; i < parts.size(); ++i) {
          try {
            const auto t = JamoToken::parse(parts[i]);
            if (!t.is_consonant()) throw TokenError(parts[i] + " is not a consonant");
            codas.insert(t.name());
          } catch (const TokenError& e) {
            throw RuleError(std::string("invalid coda: ") + e.what(), line_no);
          }
        }
        rs.codas_ = std::move(codas);
      } else if (kw == "sound") {
        if (parts.size() < 4 || parts[2] != "=") throw RuleError("expected 'sound TOKEN = ...'", line_no);
        try {
          (void)JamoToken::parse(parts[1]);
        } catch (const TokenError& e) {
          throw RuleError(std::string("invalid sound token: ") + e.what(), line_no);
        }
        std::string label;
        for (std::size_t i = 3; i < parts.size(); ++i) label += (i > 3 ? " " : "") + parts[i];
        rs.profile_.sounds[parts[1]] = label;
      } else {
        throw RuleError("unknown directive '" + kw + "'", line_no);
      }
      continue;
    }

    RewriteRule rule;
    rule.line = line_no;
    auto lhs = trim(line.substr(0, arrow));
    const auto rhs = trim(line.substr(arrow + 2));
    if (!lhs.empty() && lhs.front() == '@') {
      const auto sp = lhs.find_first_of(" \t");
      const auto guard = lhs.substr(1, sp == std::string_view::npos ? lhs.npos : sp - 1);
      const auto eq = guard.find('=');
      if (eq == std::string_view::npos) throw RuleError("expected '@option=value'", line_no);
      RuleGuard g{std::string(guard.substr(0, eq)), std::string(guard.substr(eq + 1))};
      const auto& known = known_options();
      const auto it = known.find(g.option);
      if (it == known.end()) throw RuleError("unknown option '" + g.option + "'", line_no);
      if (std::find(it->second.begin(), it->second.end(), g.value) == it->second.end())
        throw RuleError("unknown value '" + g.value + "' for " + g.option, line_no);
      rule.guard = std::move(g);
      lhs = sp == std::string_view::npos ? std::string_view{} : trim(lhs.substr(sp));
    }
    const auto bar1 = lhs.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : lhs.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || lhs.find('|', bar2 + 1) != std::string_view::npos)
      throw RuleError("expected 'LEFT | MATCH | RIGHT -> TOKENS'", line_no);
    rule.left = parse_pattern(lhs.substr(0, bar1), line_no, false);
    rule.match = parse_pattern(lhs.substr(bar1 + 1, bar2 - bar1 - 1), line_no, true);
    rule.right = parse_pattern(lhs.substr(bar2 + 1), line_no, false);
    if (rule.match.empty()) throw RuleError("empty MATCH", line_no);

    std::string out_text(rhs);
    std::replace(out_text.begin(), out_text.end(), '+', ' ');
    for (const auto& name : words_of(out_text)) {
      try {
        rule.output.push_back(JamoToken::parse(name));
      } catch (const TokenError& e) {
        throw RuleError(std::string("invalid output token: ") + e.what(), line_no);
      }
    }
    for (const auto& t : rule.output) {
      if (!t.is_plain() && !rs.profile_.sounds.count(t.name()))
        throw RuleError("no 'sound' entry for " + t.name(), line_no);
    }
    rs.rules_.push_back(std::move(rule));
  }
  return rs;
}

// ---------------------------------------------------------------------------

std::vector<InputSymbol> scan_input(std::string_view text, SymbolMode mode) {
  std::vector<InputSymbol> out;
  if (mode == SymbolMode::chars) {
    for (const auto& cp : utf8::decode(text)) {
      out.push_back({utf8::encode(utf8::to_lower(cp.value)), cp.offset, cp.length,
                     utf8::is_word_separator(cp.value)});
    }
    return out;
  }
  const auto cps = utf8::decode(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (utf8::is_space(cps[i].value)) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    bool all_punct = true;
    while (i < cps.size() && !utf8::is_space(cps[i].value)) {
      all_punct = all_punct && utf8::is_word_separator(cps[i].value);
      ++i;
    }
    const auto off = cps[first].offset;
    const auto len = cps[i - 1].offset + cps[i - 1].length - off;
    const auto raw = text.substr(off, len);
    out.push_back({all_punct ? std::string(raw) : fold_phoneme(raw), off, len, all_punct});
  }
  return out;
}

namespace {

bool element_matches(const PatternElement& e, const InputSymbol& s, const RuleSet& rs) {
  if (s.separator) return false;
  if (e.kind == PatternElement::Kind::literal) return e.literal == s.text;
  return rs.class_members(e.class_index).count(s.text) > 0;
}

std::optional<std::size_t> match_forward(const Pattern& p, std::span<const InputSymbol> syms,
                                         std::size_t pos, const RuleSet& rs) {
  for (const auto& e : p) {
    if (e.kind == PatternElement::Kind::boundary) {
      if (pos < syms.size() && !syms[pos].separator) return std::nullopt;
      continue;
    }
    if (pos >= syms.size() || !element_matches(e, syms[pos], rs)) return std::nullopt;
    ++pos;
  }
  return pos;
}

bool match_backward(const Pattern& p, std::span<const InputSymbol> syms, std::size_t pos,
                    const RuleSet& rs) {
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->kind == PatternElement::Kind::boundary) {
      if (pos > 0 && !syms[pos - 1].separator) return false;
      continue;
    }
    if (pos == 0 || !element_matches(*it, syms[pos - 1], rs)) return false;
    --pos;
  }
  return true;
}

}  // namespace

std::optional<RuleMatch> apply_rule_once(std::span<const InputSymbol> symbols, std::size_t pos,
                                         const RuleSet& rs) {
  if (pos >= symbols.size() || symbols[pos].separator) return std::nullopt;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& r = rules[i];
    if (r.guard && rs.options().at(r.guard->option) != r.guard->value) continue;
    const auto end = match_forward(r.match, symbols, pos, rs);
    if (!end) continue;
    if (!match_backward(r.left, symbols, pos, rs)) continue;
    if (!match_forward(r.right, symbols, *end, rs)) continue;
    return RuleMatch{pos, *end, r.output, i, r.line};
  }
  return std::nullopt;
}

Transliteration transliterate(std::string_view text, const RuleSet& rs) {
  const auto symbols = scan_input(text, rs.mode());
  Transliteration result;
  std::vector<JamoToken> word;
  const auto close_word = [&] {
    if (!word.empty()) result.words.push_back(std::move(word));
    word.clear();
  };
  std::size_t pos = 0;
  while (pos < symbols.size()) {
    if (symbols[pos].separator) {
      close_word();
      ++pos;
      continue;
    }
    const auto m = apply_rule_once(symbols, pos, rs);
    if (!m) throw NoRuleMatched(symbols[pos].offset);
    const auto& first = symbols[m->begin];
    const auto& last = symbols[m->end - 1];
    result.trace.push_back({first.offset, last.offset + last.length - first.offset, m->line});
    word.insert(word.end(), m->output.begin(), m->output.end());
    pos = m->end;
  }
  close_word();
  return result;
}

BlockText to_blocks(const Transliteration& result, const RuleSet& rules) {
  BlockText out;
  const auto* codas = rules.codas() ? &*rules.codas() : nullptr;
  for (const auto& w : result.words) {
    const auto completed = complete_syllables(w, codas);
    auto blocks = compose(std::span<const JamoToken>(completed));
    if (!blocks.empty()) out.push_back(std::move(blocks));
  }
  return out;
}

}  // namespace modjamo
