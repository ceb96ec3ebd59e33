#include <doctest.h>

#include "modjamo/error.hpp"
#include "modjamo/profiles.hpp"
#include "modjamo/rules.hpp"

using namespace modjamo;

namespace {

std::string run(const RuleSet& rs, std::string_view text) {
  return serialize_tokens(to_blocks(transliterate(text, rs), rs));
}

std::size_t rule_error_line(std::string_view src) {
  try {
    load_ruleset(src);
  } catch (const RuleError& e) {
    return e.line();
  }
  return 0;
}

const char* kTiny = R"(profile tiny
class V = a e i o u
codas N
sound R* = l
V | s | V -> J
| s | -> S
| c | -> GG
| n | -> N
| l | -> R*
| a | -> A
| e | -> E
| i | -> I
| o | -> O
)";

}  // namespace

TEST_CASE("load_ruleset counts rules and classes") {
  auto rs = load_ruleset("class V = a e i o u\nV | s | V -> J\n");
  CHECK(rs.rules().size() == 1);
  CHECK(rs.class_names() == std::vector<std::string>{"V"});
  CHECK(rs.find_class("V")->count("e") == 1);
  CHECK(rs.mode() == SymbolMode::chars);
}

TEST_CASE("empty rule file is valid and matches nothing") {
  auto rs = load_ruleset("");
  CHECK(rs.rules().empty());
  CHECK_THROWS_AS(transliterate("a", rs), NoRuleMatched);
  CHECK(transliterate("", rs).words.empty());
}

TEST_CASE("rule file errors carry the line number") {
  CHECK(rule_error_line("; comment\n\nX | s | -> S\n") == 3);
  CHECK(rule_error_line("| s | -> Q\n") == 1);
  CHECK(rule_error_line("| s | -> S\nclass V = a\n") == 2);
  CHECK(rule_error_line("| f | -> P*\n") == 1);  // no sound entry
  CHECK(rule_error_line("| # | -> S\n") == 1);
  CHECK(rule_error_line("|  | -> S\n") == 1);
  CHECK(rule_error_line("@nope=x | s | -> S\n") == 1);
  CHECK(rule_error_line("@spanish_variant=mars | s | -> S\n") == 1);
  CHECK(rule_error_line("codas A\n") == 1);
  CHECK(rule_error_line("symbols klingon\n") == 1);
  CHECK(rule_error_line("frobnicate\n") == 1);
  CHECK(rule_error_line("class V = a\nclass V = e\n") == 2);
  CHECK(rule_error_line("sound G* = x\n") == 1);
}

TEST_CASE("apply_rule_once steps through casa") {
  const auto& it = shipped_ruleset("it");
  auto syms = scan_input("casa", it.mode());
  REQUIRE(syms.size() == 4);
  auto first = apply_rule_once(syms, 0, it);
  REQUIRE(first);
  CHECK(first->begin == 0);
  CHECK(first->end == 1);
  REQUIRE(first->output.size() == 1);
  CHECK(first->output[0].name() == "GG");
  auto third = apply_rule_once(syms, 2, it);
  REQUIRE(third);
  CHECK(third->end == 3);
  REQUIRE(third->output.size() == 1);
  CHECK(third->output[0].name() == "J");
  CHECK_FALSE(apply_rule_once(syms, 4, it).has_value());
}

TEST_CASE("first matching rule wins and contexts apply") {
  auto rs = load_ruleset(kTiny);
  CHECK(run(rs, "casa") == "GG+A . J+A");
  CHECK(run(rs, "sasso") == "S+A . S+_ . S+O");
  CHECK(run(rs, "sal") == "S+A . R*+_");
  CHECK(run(rs, "san") == "S+A+N");
  CHECK(run(rs, "") == "");
}

TEST_CASE("boundary anchors") {
  auto rs = load_ruleset("class V = a\n# | s | -> SS\n| s | # -> T\n| s | -> S\n| a | -> A\n");
  CHECK(run(rs, "sas") == "SS+A+T");
  CHECK(run(rs, "asa sa") == "NG+A . S+A / SS+A");
}

TEST_CASE("multi-character literals and case folding") {
  auto rs = load_ruleset("| sch | -> S\n| s | -> SS\n| a | -> A\n");
  CHECK(run(rs, "SCHa") == "S+A");
  CHECK(run(rs, "sa") == "SS+A");
}

TEST_CASE("no rule matched reports the byte offset") {
  auto rs = load_ruleset(kTiny);
  try {
    transliterate("caxa", rs);
    FAIL("expected NoRuleMatched");
  } catch (const NoRuleMatched& e) {
    CHECK(e.offset() == 2);
  }
  try {
    transliterate("añx", rs);
    FAIL("expected NoRuleMatched");
  } catch (const NoRuleMatched& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("option guards") {
  const char* src = "sound S* = th\n@spanish_variant=castilian | z | -> S*\n| z | -> S\n| a | -> A\n";
  auto rs = load_ruleset(src);
  CHECK(rs.options().at("spanish_variant") == "castilian");
  CHECK(run(rs, "za") == "S*+A");
  auto latam = rs.with_option("spanish_variant", "latam");
  CHECK(run(latam, "za") == "S+A");
  CHECK_THROWS_AS(rs.with_option("spanish_variant", "mars"), RuleError);
  CHECK_THROWS_AS(rs.with_option("dialect", "x"), RuleError);
}

TEST_CASE("phoneme mode") {
  auto rs = load_ruleset("symbols phonemes\nclass VOW = AA IY\nclass CONS = S TH\nsound S* = th\n"
                         "| TH | -> S*\n| AA | -> A\n| IY | -> I\n| S | -> S\n");
  CHECK(run(rs, "TH IY S") == "S*+I+S");
  CHECK(run(rs, "th aa / s aa") == "S*+A / S+A");
}

TEST_CASE("phoneme literals must be declared in a class") {
  CHECK(rule_error_line("symbols phonemes\nclass V = AA\n| TH | -> S\n") == 3);
}

TEST_CASE("codas directive restricts syllable closers") {
  auto rs = load_ruleset("codas N\n| t | -> T\n| n | -> N\n| a | -> A\n");
  REQUIRE(rs.codas());
  CHECK(*rs.codas() == std::set<std::string>{"N"});
  CHECK(run(rs, "tat") == "T+A . T+_");
  CHECK(run(rs, "tan") == "T+A+N");
  auto open = load_ruleset("| t | -> T\n| a | -> A\n");
  CHECK_FALSE(open.codas());
  CHECK(run(open, "tat") == "T+A+T");
}

TEST_CASE("trace records each rule application") {
  auto rs = load_ruleset(kTiny);
  auto r = transliterate("casa", rs);
  REQUIRE(r.trace.size() == 4);
  CHECK(r.trace[0] == TraceStep{0, 1, 7});
  CHECK(r.trace[2] == TraceStep{2, 1, 5});
}

TEST_CASE("output alphabet of a rule set") {
  auto rs = load_ruleset(kTiny);
  auto a = rs.output_alphabet();
  CHECK(a.count("J"));
  CHECK(a.count("R*"));
  CHECK_FALSE(a.count("B"));
}

TEST_CASE("every shipped rule file loads") {
  for (const auto& id : shipped_profiles()) {
    if (is_pinyin_profile(id)) continue;
    CAPTURE(id);
    CHECK_NOTHROW(load_ruleset(shipped_rules_source(id)));
    CHECK(shipped_ruleset(id).id() == id);
  }
}
