// modjamo command-line tool.
//
// Exit codes: 0 success, 1 invalid input or failed check, 2 no rule matched
// (transliterate), 64 usage error.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modjamo/atlas.hpp"
#include "modjamo/corpus.hpp"
#include "modjamo/error.hpp"
#include "modjamo/glyph.hpp"
#include "modjamo/keyboard.hpp"
#include "modjamo/profiles.hpp"
#include "modjamo/rules.hpp"

namespace fs = std::filesystem;
using namespace modjamo;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitNoRule = 2;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

OptionMap parse_options(const std::vector<std::string>& raw) {
  OptionMap out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("option must be NAME=VALUE: " + kv);
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::string format_blocks(const BlockText& blocks, const std::string& display) {
  if (display == "tokens") return serialize_tokens(blocks);
  return to_display_text(blocks, policy_from_name(display)).text;
}

std::string default_display() { return isatty(fileno(stdout)) ? "marked" : "tokens"; }

KeyboardLayout layout_from(const std::string& path) {
  return load_layout(path.empty() ? std::string(shipped_layout_source()) : read_file(path));
}

// --- transliterate -------------------------------------------------------

struct TransliterateArgs {
  std::string profile;
  std::vector<std::string> options;
  std::string display;
  std::string rules_path;
  std::string input_path;
  bool trace = false;
  std::vector<std::string> text;
};

int cmd_transliterate(const TransliterateArgs& a) {
  const auto options = parse_options(a.options);
  std::optional<RuleSet> custom;
  if (!a.rules_path.empty()) custom = load_ruleset(read_file(a.rules_path));
  if (a.profile.empty() && !custom) throw Error("--profile or --rules is required");
  const std::string profile = a.profile.empty() ? custom->id() : a.profile;
  if (!custom) {
    const auto known = shipped_profiles();
    if (std::find(known.begin(), known.end(), profile) == known.end())
      throw Error("unknown profile '" + profile + "'");
  }
  const std::string display = a.display.empty() ? default_display() : a.display;
  if (display != "tokens") (void)policy_from_name(display);

  std::vector<std::string> lines;
  if (!a.text.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < a.text.size(); ++i) joined += (i ? " " : "") + a.text[i];
    lines.push_back(joined);
  } else {
    lines = split_lines(read_file(a.input_path.empty() ? "-" : a.input_path));
  }
  std::string out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    ProfileResult r;
    try {
      r = transliterate_with_profile(profile, lines[n], options, custom ? &*custom : nullptr);
    } catch (const NoRuleMatched& e) {
      std::cout << out << std::flush;
      std::cerr << "modjamo: line " << n + 1 << ": no rule matched at byte " << e.offset() << "\n";
      return kExitNoRule;
    }
    out += format_blocks(r.blocks, display) + "\n";
    if (a.trace)
      for (const auto& t : r.trace)
        std::cerr << "trace\t" << n + 1 << "\t" << t.offset << "\t" << t.length << "\t" << t.line
                  << "\n";
  }
  std::cout << out << std::flush;
  return 0;
}

// --- render ----------------------------------------------------------------

struct RenderArgs {
  std::string atlas_dir;
  std::string out = "-";
  int cell = 32;
  std::string format = "p4";
  std::string tokens;
  std::string profile;
  std::vector<std::string> options;
  std::string text;
};

int cmd_render(const RenderArgs& a) {
  BlockText blocks;
  if (!a.profile.empty()) {
    blocks = transliterate_with_profile(a.profile, a.text, parse_options(a.options)).blocks;
  } else {
    std::string source = a.tokens;
    if (source.empty()) {
      for (const auto& line : split_lines(read_file("-"))) {
        if (line.empty()) continue;
        if (!source.empty()) source += " / ";
        source += line;
      }
    }
    blocks = parse_tokens(source);
  }
  const auto atlas = load_atlas(a.atlas_dir);
  const auto page = render_text(blocks, atlas, a.cell);
  write_output(a.out, to_pbm(page, a.format == "p1" ? PbmFormat::ascii : PbmFormat::binary));
  return 0;
}

// --- glyph-modify ------------------------------------------------------------

struct GlyphArgs {
  std::string in, out;
  std::string kind = "consonant";
  std::string op = "thicken";
  int radius = 1;
  int start = 1;
  int end = 3;
  std::string format = "p1";
};

int cmd_glyph_modify(const GlyphArgs& a) {
  const auto glyph = load_glyph(read_file(a.in));
  const auto stroke = a.kind == "vowel" ? find_target_vowel_stroke(glyph)
                                        : find_target_consonant_stroke(glyph);
  std::cerr << "stroke\tdirection=" << direction_name(stroke.direction)
            << "\tlength=" << stroke.path.size() << "\tstart=" << stroke.path.front().x << ","
            << stroke.path.front().y << "\tthickness=" << stroke.thickness << "\n";
  const auto result = a.op == "taper" ? taper_stroke(glyph, stroke, a.start, a.end)
                                      : thicken_stroke(glyph, stroke, a.radius);
  write_output(a.out, to_pbm(result, a.format == "p4" ? PbmFormat::binary : PbmFormat::ascii));
  return 0;
}

// --- keyboard ----------------------------------------------------------------

int cmd_keyboard_sim(const std::string& layout_path, const std::string& log_path,
                     const std::string& display_opt) {
  const auto layout = layout_from(layout_path);
  const auto events = parse_session_log(read_file(log_path));
  std::vector<KeyEvent> keys;
  keys.reserve(events.size());
  for (const auto& e : events) keys.push_back(e.key);
  const auto result = keystrokes_to_blocks(keys, layout);
  const std::string display = display_opt.empty() ? default_display() : display_opt;
  std::cout << format_blocks(result.blocks, display) << "\n";
  if (result.state.rejected) std::cerr << "rejected keys: " << result.state.rejected << "\n";
  return 0;
}

int cmd_keyboard_keys(const std::string& layout_path, const std::string& profile,
                      const std::vector<std::string>& options, const std::string& tokens,
                      const std::vector<std::string>& text, int interval) {
  const auto layout = layout_from(layout_path);
  BlockText blocks;
  if (!profile.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < text.size(); ++i) joined += (i ? " " : "") + text[i];
    blocks = transliterate_with_profile(profile, joined, parse_options(options)).blocks;
  } else {
    blocks = parse_tokens(tokens);
  }
  const auto keys = blocks_to_keystrokes(blocks, layout);
  std::vector<SessionEvent> events;
  for (std::size_t i = 0; i < keys.size(); ++i)
    events.push_back({static_cast<std::int64_t>(i) * interval, keys[i]});
  std::cout << write_session_log(events);
  return 0;
}

int cmd_keyboard_audit(const std::string& layout_path) {
  const auto layout = parse_layout(layout_path.empty() ? std::string(shipped_layout_source())
                                                       : read_file(layout_path));
  std::cout << "layout\t" << layout.id() << "\tversion " << layout.version() << "\n";
  std::cout << "bindings\t" << layout.bindings().size() << "\n";
  std::cout << "injective\tyes\n";
  const auto missing = unreachable(layout, required_alphabet());
  std::cout << "reachable\t" << (missing.empty() ? "yes" : "no") << "\n";
  for (const auto& m : missing) std::cout << "unreachable\t" << m << "\n";
  return missing.empty() ? 0 : kExitFailure;
}

// --- rules -------------------------------------------------------------------

void describe_ruleset(const RuleSet& rs, const std::string& source) {
  std::cout << "profile\t" << (rs.id().empty() ? "(none)" : rs.id()) << "\t" << source << "\n";
  std::cout << "  symbols\t" << (rs.mode() == SymbolMode::chars ? "chars" : "phonemes") << "\n";
  std::cout << "  rules\t" << rs.rules().size() << "\n";
  std::cout << "  classes\t";
  const auto names = rs.class_names();
  for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
  std::cout << "\n";
  for (const auto& [k, v] : rs.options()) std::cout << "  option\t" << k << "=" << v << "\n";
  for (const auto& [t, label] : rs.profile().sounds) std::cout << "  sound\t" << t << "\t" << label << "\n";
}

int cmd_rules(const std::string& action, const std::vector<std::string>& paths) {
  if (action == "validate") {
    if (paths.empty()) throw Error("rules validate needs at least one file");
    int rc = 0;
    for (const auto& p : paths) {
      try {
        const auto rs = load_ruleset(read_file(p));
        std::cout << "ok\t" << p << "\t" << rs.rules().size() << " rules\n";
      } catch (const Error& e) {
        std::cout << "invalid\t" << p << "\t" << e.what() << "\n";
        rc = kExitFailure;
      }
    }
    return rc;
  }
  if (paths.empty()) {
    for (const auto& id : shipped_profiles()) {
      if (is_pinyin_profile(id)) {
        std::cout << "profile\t" << id << "\t(built-in pinyin)\n";
        for (const auto& [t, label] : profile_info(id).sounds)
          std::cout << "  sound\t" << t << "\t" << label << "\n";
        continue;
      }
      describe_ruleset(shipped_ruleset(id), "(shipped)");
    }
    return 0;
  }
  for (const auto& p : paths) describe_ruleset(load_ruleset(read_file(p)), p);
  return 0;
}

// --- corpus / atlas ----------------------------------------------------------

int cmd_corpus_run(const std::string& path, const std::string& out) {
  const auto outcomes = run_corpus(load_corpus_file(path));
  write_output(out, format_corpus_report(outcomes));
  for (const auto& o : outcomes)
    if (!o.passed) return kExitFailure;
  return 0;
}

int cmd_atlas_build(const std::string& base, const std::string& manifest, const std::string& out) {
  const auto m = manifest.empty() ? AtlasManifest{} : load_manifest_file(manifest);
  const auto atlas = build_atlas(base, m);
  write_atlas(atlas, out);
  std::cerr << "atlas\t" << atlas.glyphs().size() << " glyphs\t" << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transliterate into modified Hangeul, synthesize modified jamo glyphs, and "
               "simulate the modified keyboard."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "modjamo 0.1.0");

  TransliterateArgs ta;
  auto* tr = app.add_subcommand("transliterate", "Transliterate text (arguments, --input or stdin)");
  tr->add_option("--profile,-p", ta.profile, "Language profile (en it es de fr ru pt zh)");
  tr->add_option("--option,-o", ta.options, "Profile option NAME=VALUE")->allow_extra_args(false);
  tr->add_option("--display,-d", ta.display, "tokens | plain | marked (default: marked on a terminal)")
      ->check(CLI::IsMember({"tokens", "plain", "marked"}));
  tr->add_option("--rules", ta.rules_path, "Use this rule file instead of the shipped one");
  tr->add_option("--input,-i", ta.input_path, "Read lines from this file");
  tr->add_flag("--trace", ta.trace, "Print the rule trace to stderr");
  tr->add_option("text", ta.text, "Text to transliterate");

  RenderArgs ra;
  auto* rd = app.add_subcommand("render", "Render token text (stdin or --tokens) to a PBM page");
  rd->add_option("--atlas", ra.atlas_dir, "Atlas directory containing atlas.json")->required();
  rd->add_option("--out", ra.out, "Output PBM path, - for stdout");
  rd->add_option("--cell", ra.cell, "Cell size in pixels");
  rd->add_option("--format", ra.format, "p4 | p1")->check(CLI::IsMember({"p1", "p4"}));
  rd->add_option("--tokens", ra.tokens, "Token text to render");
  rd->add_option("--profile", ra.profile, "Transliterate --text with this profile first");
  rd->add_option("--option,-o", ra.options, "Profile option NAME=VALUE")->allow_extra_args(false);
  rd->add_option("--text", ra.text, "Source text for --profile");

  GlyphArgs ga;
  auto* gm = app.add_subcommand("glyph-modify", "Find the target stroke and swell it");
  gm->add_option("input", ga.in, "Input PBM")->required();
  gm->add_option("output", ga.out, "Output PBM, - for stdout")->required();
  gm->add_option("--kind", ga.kind)->check(CLI::IsMember({"consonant", "vowel"}));
  gm->add_option("--op", ga.op)->check(CLI::IsMember({"thicken", "taper"}));
  gm->add_option("--radius", ga.radius);
  gm->add_option("--start", ga.start);
  gm->add_option("--end", ga.end);
  gm->add_option("--format", ga.format)->check(CLI::IsMember({"p1", "p4"}));

  std::string layout_path, log_path, sim_display;
  auto* ks = app.add_subcommand("keyboard-sim", "Replay a session log");
  ks->add_option("--layout", layout_path, "Layout JSON (default: shipped)");
  ks->add_option("--display,-d", sim_display)->check(CLI::IsMember({"tokens", "plain", "marked"}));
  ks->add_option("log", log_path, "Session log (JSON lines), - for stdin")->required();

  auto* kb = app.add_subcommand("keyboard", "Layout tools");
  kb->require_subcommand(1);
  std::string keys_profile, keys_tokens;
  std::vector<std::string> keys_options, keys_text;
  int keys_interval = 120;
  auto* kk = kb->add_subcommand("keys", "Emit the session log that types the given text");
  kk->add_option("--layout", layout_path);
  kk->add_option("--profile,-p", keys_profile);
  kk->add_option("--option,-o", keys_options)->allow_extra_args(false);
  kk->add_option("--tokens", keys_tokens);
  kk->add_option("--interval", keys_interval, "Milliseconds between events");
  kk->add_option("text", keys_text);
  auto* ka = kb->add_subcommand("audit", "Check injectivity and reachability");
  ka->add_option("--layout", layout_path);

  std::string rules_action;
  std::vector<std::string> rules_paths;
  auto* ru = app.add_subcommand("rules", "Validate or list rule files");
  ru->add_option("action", rules_action)->required()->check(CLI::IsMember({"validate", "list"}));
  ru->add_option("files", rules_paths);

  std::string corpus_action, corpus_path, corpus_out = "-";
  auto* co = app.add_subcommand("corpus", "Run a corpus TSV");
  co->add_option("action", corpus_action)->required()->check(CLI::IsMember({"run"}));
  co->add_option("file", corpus_path)->required();
  co->add_option("--out", corpus_out, "Report path, - for stdout");

  std::string atlas_action, atlas_base, atlas_manifest, atlas_out;
  auto* at = app.add_subcommand("atlas", "Build a glyph atlas");
  at->add_option("action", atlas_action)->required()->check(CLI::IsMember({"build"}));
  at->add_option("--base", atlas_base, "Directory of base glyph PBMs")->required();
  at->add_option("--manifest", atlas_manifest, "Variant manifest JSON");
  at->add_option("--out", atlas_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tr) return cmd_transliterate(ta);
    if (*rd) return cmd_render(ra);
    if (*gm) return cmd_glyph_modify(ga);
    if (*ks) return cmd_keyboard_sim(layout_path, log_path, sim_display);
    if (*kk)
      return cmd_keyboard_keys(layout_path, keys_profile, keys_options, keys_tokens, keys_text,
                               keys_interval);
    if (*ka) return cmd_keyboard_audit(layout_path);
    if (*ru) return cmd_rules(rules_action, rules_paths);
    if (*co) return cmd_corpus_run(corpus_path, corpus_out);
    if (*at) return cmd_atlas_build(atlas_base, atlas_manifest, atlas_out);
  } catch (const NoRuleMatched& e) {
    std::cerr << "modjamo: " << e.what() << "\n";
    return kExitNoRule;
  } catch (const std::exception& e) {
    std::cerr << "modjamo: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
