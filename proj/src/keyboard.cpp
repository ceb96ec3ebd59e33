#include "modjamo/keyboard.hpp"

#include <array>
#include <cmath>

#include <json.hpp>

#include "modjamo/error.hpp"
#include "modjamo/profiles.hpp"

namespace modjamo {

namespace {

using nlohmann::json;

struct Compound {
  Jamo first, second, result;
};

constexpr std::array<Compound, 7> kCompounds = {{
    {Jamo::O, Jamo::A, Jamo::WA},
    {Jamo::O, Jamo::AE, Jamo::WAE},
    {Jamo::O, Jamo::I, Jamo::OE},
    {Jamo::U, Jamo::EO, Jamo::WO},
    {Jamo::U, Jamo::E, Jamo::WE},
    {Jamo::U, Jamo::I, Jamo::WI},
    {Jamo::EU, Jamo::I, Jamo::UI},
}};

struct Doubling {
  Jamo single, fortis;
};

constexpr std::array<Doubling, 5> kDoublings = {{
    {Jamo::G, Jamo::GG}, {Jamo::D, Jamo::DD}, {Jamo::B, Jamo::BB},
    {Jamo::S, Jamo::SS}, {Jamo::J, Jamo::JJ},
}};

KeyOutput decode_emit(const std::string& emit) {
  KeyOutput out;
  out.emit = emit;
  if (emit == "@rhotic") {
    out.action = KeyAction::rhotic;
  } else if (emit == "@space") {
    out.action = KeyAction::space;
  } else if (emit == "@backspace") {
    out.action = KeyAction::backspace;
  } else if (emit.size() == 6 && emit.rfind("@tone", 0) == 0 && emit[5] >= '1' && emit[5] <= '5') {
    out.action = KeyAction::tone;
    out.tone = emit[5] - '0';
  } else if (!emit.empty() && emit[0] == '@') {
    throw LayoutError("unknown control '" + emit + "'");
  } else {
    try {
      out.token = JamoToken::parse(emit);
    } catch (const TokenError& e) {
      throw LayoutError("invalid emit '" + emit + "': " + e.what());
    }
    if (out.token->modifier() == Modifier::rhotic)
      throw LayoutError("rhotic vowels are typed with @rhotic, not bound directly: " + emit);
  }
  return out;
}

std::string describe(const KeyEvent& k) { return (k.shift ? "Shift+" : "") + k.code; }

}  // namespace

const KeyOutput* KeyboardLayout::lookup(const KeyEvent& key) const {
  const auto it = by_key_.find({key.code, key.shift});
  return it == by_key_.end() ? nullptr : &it->second;
}

std::optional<KeyEvent> KeyboardLayout::key_for(std::string_view emit) const {
  const auto it = by_emit_.find(emit);
  if (it == by_emit_.end()) return std::nullopt;
  return it->second;
}

KeyboardLayout parse_layout(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LayoutError(std::string("layout is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LayoutError("layout must be a JSON object");
  for (const char* field : {"id", "version", "keys"})
    if (!doc.contains(field)) throw LayoutError(std::string("layout is missing '") + field + "'");
  if (!doc["id"].is_string()) throw LayoutError("layout 'id' must be a string");
  if (!doc["version"].is_number_integer()) throw LayoutError("layout 'version' must be an integer");
  if (!doc["keys"].is_array()) throw LayoutError("layout 'keys' must be an array");

  KeyboardLayout layout;
  layout.id_ = doc["id"].get<std::string>();
  layout.version_ = doc["version"].get<int>();
  for (std::size_t i = 0; i < doc["keys"].size(); ++i) {
    const auto& k = doc["keys"][i];
    if (!k.is_object() || !k.contains("code") || !k["code"].is_string() || !k.contains("emit") ||
        !k["emit"].is_string())
      throw LayoutError("key " + std::to_string(i) + " needs string 'code' and 'emit'");
    if (k.contains("shift") && !k["shift"].is_boolean())
      throw LayoutError("key " + std::to_string(i) + ": 'shift' must be a boolean");
    KeyBinding b{{k["code"].get<std::string>(), k.value("shift", false)},
                 k["emit"].get<std::string>()};
    auto out = decode_emit(b.emit);
    if (!layout.by_key_.emplace(std::pair{b.key.code, b.key.shift}, std::move(out)).second)
      throw LayoutError("duplicate assignment for " + describe(b.key));
    if (!layout.by_emit_.emplace(b.emit, b.key).second)
      throw LayoutError("'" + b.emit + "' is bound to more than one key");
    layout.bindings_.push_back(std::move(b));
  }
  return layout;
}

std::optional<Jamo> combine_vowels(Jamo first, Jamo second) {
  for (const auto& c : kCompounds)
    if (c.first == first && c.second == second) return c.result;
  return std::nullopt;
}

std::optional<std::pair<Jamo, Jamo>> split_compound_vowel(Jamo v) {
  for (const auto& c : kCompounds)
    if (c.result == v) return std::pair{c.first, c.second};
  return std::nullopt;
}

bool reachable(const KeyboardLayout& layout, std::string_view emit) {
  if (layout.key_for(emit)) return true;
  if (!emit.empty() && emit[0] == '@') return false;
  std::optional<JamoToken> token;
  try {
    token = JamoToken::parse(emit);
  } catch (const TokenError&) {
    return false;
  }
  if (token->modifier() == Modifier::rhotic) {
    if (!layout.key_for("@rhotic")) return false;
    return reachable(layout, token->with_modifier(Modifier::plain).name());
  }
  if (token->is_vowel() && token->is_plain()) {
    if (const auto parts = split_compound_vowel(token->base()))
      return layout.key_for(jamo_name(parts->first)) && layout.key_for(jamo_name(parts->second));
  }
  return false;
}

std::vector<std::string> unreachable(const KeyboardLayout& layout,
                                     const std::set<std::string>& required) {
  std::vector<std::string> out;
  for (const auto& t : required)
    if (!reachable(layout, t)) out.push_back(t);
  return out;
}

std::set<std::string> required_alphabet() {
  std::set<std::string> all;
  for (const auto& p : shipped_profiles()) {
    const auto a = profile_alphabet(p);
    all.insert(a.begin(), a.end());
  }
  return all;
}

KeyboardLayout load_layout(std::string_view text) {
  auto layout = parse_layout(text);
  const auto missing = unreachable(layout, required_alphabet());
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw LayoutError("layout cannot type required tokens: " + list);
  }
  return layout;
}

// ---------------------------------------------------------------------------
// Automaton

namespace {

SyllableBlock to_block(const PendingBlock& p) {
  return SyllableBlock(*p.onset, *p.nucleus, p.coda, p.tone);
}

void commit(CompositionState& s) {
  if (s.pending.onset && s.pending.nucleus) {
    if (s.words.empty()) s.words.emplace_back();
    s.words.back().push_back(to_block(s.pending));
  }
  s.pending = {};
}

void start_vowel(CompositionState& s, const JamoToken& v) {
  s.pending.onset = JamoToken::consonant(Jamo::NG);
  s.pending.nucleus = v;
  s.pending.implicit_onset = true;
}

void type_consonant(CompositionState& s, const JamoToken& c) {
  auto& p = s.pending;
  if (p.empty()) {
    p.onset = c.with_role(Role::onset);
    return;
  }
  if (!p.nucleus) {
    if (p.onset->is_plain() && c.is_plain() && p.onset->base() == c.base()) {
      for (const auto& d : kDoublings) {
        if (d.single == c.base()) {
          p.onset = JamoToken::consonant(d.fortis);
          return;
        }
      }
    }
    ++s.rejected;
    return;
  }
  if (!p.coda && p.tone == 0) {
    p.coda = c.with_role(Role::coda);
    return;
  }
  commit(s);
  s.pending.onset = c.with_role(Role::onset);
}

void type_vowel(CompositionState& s, const JamoToken& v) {
  auto& p = s.pending;
  if (p.empty()) {
    start_vowel(s, v);
    return;
  }
  if (!p.nucleus) {
    p.nucleus = v;
    return;
  }
  if (p.tone == 0 && p.coda) {
    const auto moved = p.coda->with_role(Role::onset);
    p.coda.reset();
    commit(s);
    s.pending.onset = moved;
    s.pending.nucleus = v;
    return;
  }
  if (p.tone == 0 && p.nucleus->is_plain() && v.is_plain()) {
    if (const auto c = combine_vowels(p.nucleus->base(), v.base())) {
      p.nucleus = JamoToken::vowel(*c);
      return;
    }
  }
  commit(s);
  start_vowel(s, v);
}

void backspace(CompositionState& s) {
  auto& p = s.pending;
  if (p.empty()) {
    if (!s.words.empty() && s.words.back().empty()) {
      s.words.pop_back();
      return;
    }
    if (s.words.empty()) {
      ++s.rejected;
      return;
    }
    // The reopened block stays in its word, even if that word is now empty.
    const auto b = s.words.back().back();
    s.words.back().pop_back();
    p.onset = b.onset();
    p.nucleus = b.nucleus();
    p.coda = b.coda();
    p.tone = b.tone();
    p.implicit_onset = false;
  }
  if (p.tone) {
    p.tone = 0;
  } else if (p.coda) {
    p.coda.reset();
  } else if (p.nucleus) {
    if (!p.nucleus->is_plain()) {
      p.nucleus = p.nucleus->with_modifier(Modifier::plain);
    } else if (const auto parts = split_compound_vowel(p.nucleus->base())) {
      p.nucleus = JamoToken::vowel(parts->first);
    } else {
      p.nucleus.reset();
      if (p.implicit_onset) p = {};
    }
  } else {
    p = {};
  }
}

}  // namespace

CompositionState step(CompositionState s, const KeyEvent& key, const KeyboardLayout& layout) {
  const auto* out = layout.lookup(key);
  if (!out) throw LayoutError("key " + describe(key) + " is not in layout " + layout.id());
  auto& p = s.pending;
  switch (out->action) {
    case KeyAction::jamo:
      if (out->token->is_vowel()) type_vowel(s, *out->token);
      else type_consonant(s, *out->token);
      break;
    case KeyAction::rhotic:
      if (p.nucleus && p.nucleus->base() != Jamo::SIL && p.tone == 0 && !p.coda) {
        p.nucleus = p.nucleus->with_modifier(p.nucleus->is_plain() ? Modifier::rhotic
                                                                   : Modifier::plain);
      } else {
        ++s.rejected;
      }
      break;
    case KeyAction::tone:
      if (p.nucleus) p.tone = out->tone;
      else ++s.rejected;
      break;
    case KeyAction::space:
      if (p.onset && !p.nucleus) {
        ++s.rejected;
        break;
      }
      commit(s);
      if (!s.words.empty() && !s.words.back().empty()) s.words.emplace_back();
      break;
    case KeyAction::backspace:
      backspace(s);
      break;
  }
  return s;
}

BlockText current_blocks(const CompositionState& s) {
  BlockText out = s.words;
  if (s.pending.onset && s.pending.nucleus) {
    if (out.empty()) out.emplace_back();
    out.back().push_back(to_block(s.pending));
  }
  std::erase_if(out, [](const Word& w) { return w.empty(); });
  return out;
}

KeyboardResult keystrokes_to_blocks(std::span<const KeyEvent> keys, const KeyboardLayout& layout,
                                    CompositionState state) {
  for (const auto& k : keys) state = step(std::move(state), k, layout);
  return {current_blocks(state), std::move(state)};
}

std::vector<KeyEvent> blocks_to_keystrokes(const BlockText& text, const KeyboardLayout& layout) {
  std::vector<KeyEvent> keys;
  const auto press = [&](std::string_view emit) {
    const auto k = layout.key_for(emit);
    if (!k) throw LayoutError("layout " + layout.id() + " cannot type '" + std::string(emit) + "'");
    keys.push_back(*k);
  };
  const auto type_nucleus = [&](const JamoToken& v) {
    const auto plain = v.with_modifier(Modifier::plain);
    if (layout.key_for(plain.name())) {
      press(plain.name());
    } else if (const auto parts = split_compound_vowel(v.base())) {
      press(jamo_name(parts->first));
      press(jamo_name(parts->second));
    } else {
      press(plain.name());
    }
    if (v.modifier() == Modifier::rhotic) press("@rhotic");
  };
  bool first_word = true;
  for (const auto& word : text) {
    if (word.empty()) continue;
    if (!first_word) press("@space");
    first_word = false;
    for (const auto& b : word) {
      press(b.onset().name());
      type_nucleus(b.nucleus());
      if (b.coda()) press(b.coda()->name());
      if (b.tone()) press("@tone" + std::to_string(b.tone()));
    }
  }
  return keys;
}

// ---------------------------------------------------------------------------
// Session log

std::vector<SessionEvent> parse_session_log(std::string_view text) {
  std::vector<SessionEvent> events;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto where = "session log line " + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LayoutError(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("code") || !j["code"].is_string())
      throw LayoutError(where + ": needs a string 'code'");
    SessionEvent ev;
    ev.key.code = j["code"].get<std::string>();
    if (j.contains("shift")) {
      if (!j["shift"].is_boolean()) throw LayoutError(where + ": 'shift' must be a boolean");
      ev.key.shift = j["shift"].get<bool>();
    }
    if (j.contains("t")) {
      if (j["t"].is_number_integer()) ev.t = j["t"].get<std::int64_t>();
      else if (j["t"].is_number()) ev.t = static_cast<std::int64_t>(std::llround(j["t"].get<double>()));
      else throw LayoutError(where + ": 't' must be a number");
    }
    events.push_back(std::move(ev));
  }
  return events;
}

std::string write_session_log(std::span<const SessionEvent> events) {
  std::string out;
  for (const auto& e : events) {
    json j = {{"t", e.t}, {"code", e.key.code}, {"shift", e.key.shift}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace modjamo
