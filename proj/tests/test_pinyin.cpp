#include <doctest.h>

#include <map>

#include "modjamo/error.hpp"
#include "modjamo/pinyin.hpp"

using namespace modjamo;

namespace {

std::string zh(std::string_view text) { return serialize_tokens(transliterate_pinyin_text(text)); }

// The published initial table, transcribed separately from the library.
const std::map<std::string, std::string> kInitials = {
    {"b", "BB"}, {"p", "P"},   {"m", "M"},   {"f", "P*"},  {"d", "D"},   {"t", "T"},
    {"n", "N"},  {"l", "R"},   {"g", "G"},   {"k", "K"},   {"h", "H"},   {"j", "J"},
    {"q", "CH"}, {"x", "S"},   {"zh", "J*"}, {"ch", "CH*"}, {"sh", "S*"}, {"r", "R*"},
    {"z", "J"},  {"c", "CH"},  {"s", "SS"},
};

}  // namespace

TEST_CASE("initial table is exhaustive and exact") {
  CHECK(pinyin_initials().size() == 21);
  for (auto ini : pinyin_initials()) {
    CAPTURE(ini);
    REQUIRE(kInitials.count(std::string(ini)));
    CHECK(pinyin_initial_token(ini).name() == kInitials.at(std::string(ini)));
    auto blocks = transliterate_pinyin_text(std::string(ini) + "a1");
    REQUIRE(blocks.size() == 1);
    REQUIRE(blocks[0].size() == 1);
    CHECK(blocks[0][0].onset().name() == kInitials.at(std::string(ini)));
    CHECK(blocks[0][0].tone() == 1);
  }
}

TEST_CASE("segmentation") {
  CHECK(segment_pinyin("Běijīng") ==
        std::vector<PinyinSyllable>{{"b", "ei", 3}, {"j", "ing", 1}});
  CHECK(segment_pinyin("ma1") == std::vector<PinyinSyllable>{{"m", "a", 1}});
  CHECK(segment_pinyin("Zhōngguó") ==
        std::vector<PinyinSyllable>{{"zh", "ong", 1}, {"g", "uo", 2}});
  CHECK(segment_pinyin("ma") == std::vector<PinyinSyllable>{{"m", "a", 5}});
  CHECK(segment_pinyin("Xī'ān") == std::vector<PinyinSyllable>{{"x", "i", 1}, {"", "an", 1}});
  CHECK(segment_pinyin("lǜ") == std::vector<PinyinSyllable>{{"l", "v", 4}});
  CHECK(segment_pinyin("").empty());
  CHECK_THROWS_AS(segment_pinyin("qqq"), SyntaxError);
}

TEST_CASE("example words") {
  CHECK(zh("Nǐ hǎo") == "N+I3 . H+A3 . NG+O3");
  CHECK(zh("Ni3 hao3") == "N+I3 . H+A3 . NG+O3");
  CHECK(zh("Běijīng") == "BB+AE3 . NG+I3 . J+I+NG1");
  CHECK(zh("Shànghǎi") == "S*+A+NG4 . H+A3 . NG+I3");
  CHECK(zh("Sìchuān") == "SS+EU4 . CH*+WA+N1");
  CHECK(zh("Zìyóu") == "J+EU4 . NG+YO2 . NG+U2");
  CHECK(zh("Cìkè") == "CH+EU4 . K+EO4");
  CHECK(zh("") == "");
}

TEST_CASE("tone applies to every block of a syllable") {
  auto b = transliterate_pinyin(segment_pinyin("hǎo"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].tone() == 3);
  CHECK(b[1].tone() == 3);
}

TEST_CASE("only retroflex initials and er carry modifiers") {
  auto count = [](std::string_view text) {
    int n = 0;
    for (const auto& w : transliterate_pinyin_text(text))
      for (const auto& b : w) {
        n += !b.onset().is_plain();
        n += !b.nucleus().is_plain();
        n += b.coda() && !b.coda()->is_plain();
      }
    return n;
  };
  CHECK(count("Sìhǎi zhī nèi jiē xiōngdì yě") == 1);
  CHECK(count("Sānsī ér hòu xíng") == 1);
  CHECK(count("zhī chī shī rì") == 4);
  CHECK(count("fā") == 1);
}

TEST_CASE("sentence punctuation separates words") {
  auto t = transliterate_pinyin_text("nǐ hǎo, zàijiàn");
  CHECK(t.size() == 2);
}
