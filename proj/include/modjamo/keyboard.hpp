#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modjamo/jamo.hpp"

namespace modjamo {

/// A physical key press; `code` follows KeyboardEvent.code ("KeyQ", "Digit1").
struct KeyEvent {
  std::string code;
  bool shift = false;
  friend bool operator==(const KeyEvent&, const KeyEvent&) = default;
};

enum class KeyAction { jamo, rhotic, tone, space, backspace };

struct KeyOutput {
  KeyAction action = KeyAction::jamo;
  std::optional<JamoToken> token;  // KeyAction::jamo
  int tone = 0;                    // KeyAction::tone
  std::string emit;                // as written in the layout file
};

struct KeyBinding {
  KeyEvent key;
  std::string emit;
};

class KeyboardLayout {
 public:
  const std::string& id() const noexcept { return id_; }
  int version() const noexcept { return version_; }
  const std::vector<KeyBinding>& bindings() const noexcept { return bindings_; }

  /// nullptr when the key is not bound.
  const KeyOutput* lookup(const KeyEvent& key) const;
  /// The key that emits `emit` ("B*", "_", "@tone3"), if any.
  std::optional<KeyEvent> key_for(std::string_view emit) const;

 private:
  friend KeyboardLayout parse_layout(std::string_view json);

  std::string id_;
  int version_ = 0;
  std::vector<KeyBinding> bindings_;
  std::map<std::pair<std::string, bool>, KeyOutput> by_key_;
  std::map<std::string, KeyEvent, std::less<>> by_emit_;
};

/// Schema {id, version, keys: [{code, shift, emit}]}. `emit` is a token name,
/// "_" for the silent vowel, or one of "@rhotic", "@tone1".."@tone5",
/// "@space", "@backspace". Checks the schema and injectivity (no key bound
/// twice, no emit on two keys). Throws LayoutError.
KeyboardLayout parse_layout(std::string_view json);

/// parse_layout plus the reachability audit against every shipped profile.
KeyboardLayout load_layout(std::string_view json);

/// Compound vowels typed as two keys (O then A gives WA).
std::optional<Jamo> combine_vowels(Jamo first, Jamo second);
std::optional<std::pair<Jamo, Jamo>> split_compound_vowel(Jamo v);

/// Whether a token name or "@control" can be typed on the layout.
bool reachable(const KeyboardLayout& layout, std::string_view emit);
std::vector<std::string> unreachable(const KeyboardLayout& layout,
                                     const std::set<std::string>& required);
/// Every token (and tone control) any shipped profile can produce.
std::set<std::string> required_alphabet();

struct PendingBlock {
  std::optional<JamoToken> onset;
  std::optional<JamoToken> nucleus;
  std::optional<JamoToken> coda;
  int tone = 0;
  bool implicit_onset = false;  // NG inserted for a bare vowel
  bool empty() const noexcept { return !onset && !nucleus; }
  friend bool operator==(const PendingBlock&, const PendingBlock&) = default;
};

/// Value-type automaton state. `words` holds committed blocks; its last
/// word is the open one.
struct CompositionState {
  BlockText words;
  PendingBlock pending;
  std::size_t rejected = 0;  // keys the automaton refused
  friend bool operator==(const CompositionState&, const CompositionState&) = default;
};

/// One automaton step. Throws LayoutError for a key the layout lacks;
/// keys that are illegal in the current state are counted in `rejected`.
CompositionState step(CompositionState state, const KeyEvent& key, const KeyboardLayout& layout);

/// Committed blocks plus the pending block when it is complete.
BlockText current_blocks(const CompositionState& state);

struct KeyboardResult {
  BlockText blocks;
  CompositionState state;
};

KeyboardResult keystrokes_to_blocks(std::span<const KeyEvent> keys, const KeyboardLayout& layout,
                                    CompositionState initial = {});

/// Keys that retype `text`; words are separated by Space. Throws
/// LayoutError for an unreachable token.
std::vector<KeyEvent> blocks_to_keystrokes(const BlockText& text, const KeyboardLayout& layout);

/// Session log: one JSON object per line, {"t": ms, "code": ..., "shift": ...}.
struct SessionEvent {
  std::int64_t t = 0;
  KeyEvent key;
  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

std::vector<SessionEvent> parse_session_log(std::string_view jsonl);
std::string write_session_log(std::span<const SessionEvent> events);

}  // namespace modjamo
