#include <doctest.h>

#include <random>

#include "modjamo/error.hpp"
#include "modjamo/glyph.hpp"
#include "oracles.hpp"

using namespace modjamo;
using oracle::from_rows;

namespace {

const std::vector<std::string> kGiyeok = {
    "............",
    ".#########..",
    ".#########..",
    "........##..",
    "........##..",
    "........##..",
    "........##..",
    "........##..",
    "........##..",
    "............",
};

const std::vector<std::string> kNieun = {
    "............",
    ".##.........",
    ".##.........",
    ".##.........",
    ".##.........",
    ".##.........",
    ".#########..",
    ".#########..",
    "............",
};

const std::vector<std::string> kA = {
    "..........",
    "...##.....",
    "...##.....",
    "...##.....",
    "...####...",
    "...####...",
    "...##.....",
    "...##.....",
    "...##.....",
    "..........",
};

const std::vector<std::string> kEu = {
    "............",
    "............",
    "............",
    ".##########.",
    ".##########.",
    "............",
};

bool path_in_rows(const StrokeSegment& s, int y0, int y1) {
  for (auto p : s.path)
    if (p.y < y0 || p.y > y1) return false;
  return true;
}

bool path_in_cols(const StrokeSegment& s, int x0, int x1) {
  for (auto p : s.path)
    if (p.x < x0 || p.x > x1) return false;
  return true;
}

}  // namespace

TEST_CASE("PBM parsing") {
  auto b = parse_pbm("P1 3 1\n1 1 1\n");
  CHECK(b.width() == 3);
  CHECK(b.height() == 1);
  CHECK(b.ink_count() == 3);
  std::string p4 = "P4\n3 1\n";
  p4 += static_cast<char>(0xE0);
  CHECK(parse_pbm(p4) == b);
  CHECK(parse_pbm("P1\n# comment\n2 2\n1001") == from_rows({"#.", ".#"}));
  CHECK_THROWS_AS(load_glyph("P1 0 0\n"), GlyphError);
  CHECK_THROWS_AS(parse_pbm("P2 1 1\n1"), GlyphError);
  CHECK_THROWS_AS(parse_pbm("P1 2 2\n1 0 1"), GlyphError);
  CHECK_THROWS_AS(parse_pbm("P4\n9 1\n"), GlyphError);
  CHECK_THROWS_AS(load_glyph("P1 2 1\n0 0\n"), GlyphError);
  CHECK_THROWS_AS(load_glyph("P1 300 1\n" + std::string(300, '1')), GlyphError);
}

TEST_CASE("PBM writing round trips in both formats") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto b = oracle::random_bitmap(rng, 1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 9),
                                   0.4);
    CHECK(parse_pbm(to_pbm(b, PbmFormat::ascii)) == b);
    CHECK(parse_pbm(to_pbm(b, PbmFormat::binary)) == b);
  }
}

TEST_CASE("connected components examples") {
  auto two = connected_components(from_rows({"#..", "...", "..#"}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].pixels.size() == 1);
  auto square = connected_components(from_rows({"###", "###", "###"}));
  REQUIRE(square.size() == 1);
  CHECK(square[0].pixels.size() == 9);
  CHECK(connected_components(from_rows({"#.", ".#"})).size() == 1);
  CHECK(connected_components(GlyphBitmap(4, 4)).empty());
}

TEST_CASE("connected components match flood fill") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto b = oracle::random_bitmap(rng, 16, 16, 0.15 + 0.5 * (i % 7) / 7.0);
    auto want = oracle::flood_fill(b);
    auto got = connected_components(b);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].pixels == want[k]);
  }
}

TEST_CASE("skeleton stays inside the ink and keeps connectivity") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto b = oracle::random_bitmap(rng, 16, 16, 0.55);
    auto s = skeletonize(b);
    for (int y = 0; y < 16; ++y)
      for (int x = 0; x < 16; ++x)
        if (s.get(x, y)) CHECK(b.get(x, y));
    CHECK(connected_components(s).size() == connected_components(b).size());
  }
  auto bar = skeletonize(from_rows({"..........", ".########.", ".########.", ".########.", ".........."}));
  CHECK(bar.ink_count() >= 4);
  CHECK(bar.ink_count() <= 8);
}

TEST_CASE("consonant finder") {
  SUBCASE("single horizontal bar") {
    auto g = from_rows({".......", ".#####.", "......."});
    auto s = find_target_consonant_stroke(g);
    CHECK(s.direction == StrokeDirection::rightward);
    CHECK(s.path.size() == 5);
    CHECK(s.path.front() == Pixel{1, 1});
  }
  SUBCASE("giyeok picks the top bar") {
    auto g = from_rows(kGiyeok);
    auto s = find_target_consonant_stroke(g);
    CHECK(s.direction == StrokeDirection::rightward);
    CHECK(path_in_rows(s, 1, 2));
    CHECK(s.path.size() >= 7);
  }
  SUBCASE("nieun picks the bottom bar") {
    auto s = find_target_consonant_stroke(from_rows(kNieun));
    CHECK(s.direction == StrokeDirection::rightward);
    CHECK(path_in_rows(s, 6, 7));
  }
  SUBCASE("vertical only") {
    auto s = find_target_consonant_stroke(from_rows({"...", ".#.", ".#.", ".#.", ".#.", "..."}));
    CHECK(s.direction == StrokeDirection::downward);
    CHECK(s.path.front() == Pixel{1, 1});
  }
  SUBCASE("diagonal only") {
    auto s = find_target_consonant_stroke(from_rows({"#....", ".#...", "..#..", "...#.", "....#"}));
    CHECK(s.direction == StrokeDirection::diagonal);
    CHECK(s.path.size() == 5);
  }
  SUBCASE("single pixel") {
    auto s = find_target_consonant_stroke(from_rows({"...", ".#.", "..."}));
    CHECK(s.direction == StrokeDirection::rightward);
    CHECK(s.path == std::vector<Pixel>{{1, 1}});
  }
  CHECK_THROWS_AS(find_target_consonant_stroke(GlyphBitmap(3, 3)), GlyphError);
}

TEST_CASE("consonant finder only looks at the first cluster") {
  auto g = from_rows({"..#.........", "..#.........", "..#.........", "............",
                      "############"});
  auto s = find_target_consonant_stroke(g);
  CHECK(s.direction == StrokeDirection::downward);
}

TEST_CASE("vowel finder") {
  auto a = from_rows(kA);
  auto s = find_target_vowel_stroke(a);
  auto want = oracle::best_vowel_run(a);
  CHECK(want.vertical);
  CHECK(s.direction == StrokeDirection::downward);
  CHECK(s.path.front() == want.start);
  CHECK(static_cast<int>(s.path.size()) == want.length);
  CHECK(path_in_cols(s, 3, 4));

  auto eu = from_rows(kEu);
  auto h = find_target_vowel_stroke(eu);
  CHECK(h.direction == StrokeDirection::rightward);
  CHECK(h.path.size() == 10);
  CHECK(h.path.front() == Pixel{1, 3});

  auto plus = from_rows({"..#..", "..#..", "#####", "..#..", "..#.."});
  auto p = find_target_vowel_stroke(plus);
  CHECK(p.direction == StrokeDirection::downward);
  CHECK(p.path.front() == Pixel{2, 0});
  CHECK(p.path.size() == 5);
  CHECK_THROWS_AS(find_target_vowel_stroke(GlyphBitmap(2, 2)), GlyphError);
}

TEST_CASE("vowel finder agrees with run enumeration") {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    auto b = oracle::random_bitmap(rng, 12, 12, 0.5);
    if (b.ink_count() == 0) continue;
    auto want = oracle::best_vowel_run(b);
    auto s = find_target_vowel_stroke(b);
    CHECK(s.path.front() == want.start);
    CHECK(static_cast<int>(s.path.size()) == want.length);
    CHECK((s.direction == StrokeDirection::downward) == want.vertical);
  }
}

TEST_CASE("thicken examples") {
  auto g = from_rows({".....", ".###.", "....."});
  auto s = find_target_consonant_stroke(g);
  auto t = thicken_stroke(g, s, 1);
  CHECK(t == from_rows({"#####", "#####", "#####"}));
  CHECK_THROWS_AS(thicken_stroke(g, s, 0), GlyphError);
  StrokeSegment outside{{{0, 0}}, StrokeDirection::rightward, 1};
  CHECK_THROWS_AS(thicken_stroke(g, outside, 1), GlyphError);
}

TEST_CASE("thicken matches the Chebyshev oracle") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto b = oracle::random_bitmap(rng, 16, 16, 0.3);
    if (b.ink_count() == 0) continue;
    const bool vowel = i % 2;
    auto s = vowel ? find_target_vowel_stroke(b) : find_target_consonant_stroke(b);
    const int r = 1 + i % 3;
    auto got = thicken_stroke(b, s, r);
    CHECK(got == oracle::thicken(b, s.path, r));
  }
}

TEST_CASE("taper examples") {
  auto g = from_rows({"..........", "..........", "..........", "..........", ".########.",
                      "..........", "..........", "..........", ".........."});
  auto s = find_target_consonant_stroke(g);
  REQUIRE(s.path.size() == 8);
  CHECK(taper_stroke(g, s, 2, 2) == thicken_stroke(g, s, 2));
  auto t = taper_stroke(g, s, 1, 3);
  auto radii = oracle::ramp_radii(8, 1, 3);
  CHECK(taper_radii(8, 1, 3) == radii);
  CHECK(t == oracle::dilate_path(g, s.path, radii));
  StrokeSegment rev = s;
  std::reverse(rev.path.begin(), rev.path.end());
  auto back = taper_stroke(g, rev, 1, 3);
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x) CHECK(back.get(x, y) == t.get(g.width() - 1 - x, y));
  CHECK_THROWS_AS(taper_stroke(g, s, 0, 2), GlyphError);
}

TEST_CASE("taper matches the ramp oracle on random glyphs") {
  std::mt19937 rng(19);
  for (int i = 0; i < 300; ++i) {
    auto b = oracle::random_bitmap(rng, 16, 16, 0.35);
    if (b.ink_count() == 0) continue;
    auto s = find_target_vowel_stroke(b);
    const int a = 1 + i % 3, e = 1 + (i / 3) % 3;
    CHECK(taper_stroke(b, s, a, e) == oracle::dilate_path(b, s.path, oracle::ramp_radii(s.path.size(), a, e)));
  }
}
