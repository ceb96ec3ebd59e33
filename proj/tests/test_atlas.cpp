#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "modjamo/atlas.hpp"
#include "modjamo/error.hpp"
#include "oracles.hpp"

using namespace modjamo;
namespace fs = std::filesystem;

namespace {

const fs::path kGlyphDir = fs::path(MODJAMO_SOURCE_DIR) / "data" / "glyphs";

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("modjamo_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const GlyphAtlas& base_atlas() {
  static const GlyphAtlas a = build_atlas(kGlyphDir, {});
  return a;
}

// Independent compositor: cell rectangles from the documented layout table.
GlyphBitmap composite(const BlockText& text, const GlyphAtlas& atlas, int s) {
  const int t = s / 4;
  int cells = 0;
  for (std::size_t w = 0; w < text.size(); ++w) cells += static_cast<int>(text[w].size()) + (w ? 1 : 0);
  if (cells == 0) return {};
  GlyphBitmap page(cells * s, t + s);
  int cell = 0;
  for (std::size_t w = 0; w < text.size(); ++w) {
    if (w) ++cell;
    for (const auto& b : text[w]) {
      const int x0 = cell * s, y0 = t;
      const int body = b.coda() ? s * 2 / 3 : s;
      const auto& on = atlas.at(b.onset().name());
      const auto& nu = atlas.at(b.nucleus().name());
      if (stacks_vertically(b.nucleus().base())) {
        oracle::paste(page, on, x0 + 1, y0 + 1, s - 2, body / 2 - 2);
        oracle::paste(page, nu, x0 + 1, y0 + body / 2 + 1, s - 2, body - body / 2 - 2);
      } else {
        oracle::paste(page, on, x0 + 1, y0 + 1, s / 2 - 2, body - 2);
        oracle::paste(page, nu, x0 + s / 2 + 1, y0 + 1, s - s / 2 - 2, body - 2);
      }
      if (b.coda()) oracle::paste(page, atlas.at(b.coda()->name()), x0 + 1, y0 + body + 1, s - 2, s - body - 2);
      ++cell;
    }
  }
  return page;
}

GlyphBitmap crop(const GlyphBitmap& g, int x0, int y0, int w, int h) {
  GlyphBitmap out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.set(x, y, g.get(x0 + x, y0 + y));
  return out;
}

}  // namespace

TEST_CASE("glyph file names") {
  CHECK(glyph_file_name("B") == "B.pbm");
  CHECK(glyph_file_name("B*") == "B_m.pbm");
  CHECK(glyph_file_name("A^") == "A_r.pbm");
  CHECK(glyph_file_name("_") == "SIL.pbm");
  CHECK(base_glyph_tokens().size() == 41);
}

TEST_CASE("manifest parsing") {
  auto m = parse_manifest(R"({"variants":[{"token":"B*","op":"thicken","radius":2},
                                          {"token":"A^","op":"taper","start":1,"end":3}]})");
  REQUIRE(m.variants.size() == 2);
  CHECK(m.variants[0].radius == 2);
  CHECK(m.variants[1].op == AtlasVariant::Op::taper);
  CHECK(m.variants[1].end == 3);
  CHECK(parse_manifest(R"({"variants":[]})").variants.empty());
  CHECK_THROWS_AS(parse_manifest("{"), GlyphError);
  CHECK_THROWS_AS(parse_manifest(R"({"variants":[{"token":"B*","op":"melt"}]})"), GlyphError);
  CHECK_THROWS_AS(parse_manifest(R"({"variants":[{"token":"G*","op":"thicken","radius":1}]})"), Error);
}

TEST_CASE("empty manifest gives exactly the base set") {
  const auto& a = base_atlas();
  CHECK(a.glyphs().size() == 41);
  for (const auto& t : base_glyph_tokens()) {
    CAPTURE(t);
    REQUIRE(a.find(t));
    CHECK(*a.find(t) == load_glyph_file(kGlyphDir / glyph_file_name(t)));
  }
}

TEST_CASE("variants change the base glyph only near the found stroke") {
  AtlasManifest m;
  m.variants.push_back({"B*", AtlasVariant::Op::thicken, 2, 1, 1});
  m.variants.push_back({"A^", AtlasVariant::Op::taper, 1, 1, 3});
  auto a = build_atlas(kGlyphDir, m);
  CHECK(a.glyphs().size() == 43);
  const auto& b = a.at("B");
  const auto& bm = a.at("B*");
  auto stroke = find_target_consonant_stroke(b);
  CHECK(bm == oracle::thicken(b, stroke.path, 2));
  int changed = 0;
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      if (b.get(x, y)) CHECK(bm.get(x, y));
      if (bm.get(x, y) != b.get(x, y)) {
        ++changed;
        int best = 1 << 20;
        for (auto p : stroke.path) best = std::min(best, oracle::chebyshev({x, y}, p));
        CHECK(best <= 2);
      }
    }
  CHECK(changed > 0);
  const auto& av = a.at("A^");
  auto vs = find_target_vowel_stroke(a.at("A"));
  CHECK(av == oracle::dilate_path(a.at("A"), vs.path, oracle::ramp_radii(vs.path.size(), 1, 3)));
}

TEST_CASE("atlas errors") {
  AtlasManifest bad;
  bad.variants.push_back({"G*", AtlasVariant::Op::thicken, 1, 1, 1});
  CHECK_THROWS_AS(build_atlas(kGlyphDir, bad), Error);
  CHECK_THROWS_AS(build_atlas(scratch("empty"), {}), GlyphError);
  CHECK_THROWS_AS(base_atlas().at("B*"), GlyphError);
}

TEST_CASE("write and load atlas round trip, byte-stable") {
  AtlasManifest m;
  m.variants.push_back({"B*", AtlasVariant::Op::thicken, 1, 1, 1});
  auto a = build_atlas(kGlyphDir, m);
  auto d1 = scratch("atlas1"), d2 = scratch("atlas2");
  write_atlas(a, d1);
  write_atlas(build_atlas(kGlyphDir, m), d2);
  CHECK(load_atlas(d1) == a);
  for (const auto& entry : fs::directory_iterator(d1))
    CHECK(slurp(entry.path()) == slurp(d2 / entry.path().filename()));
  auto index = slurp(d1 / "atlas.json");
  CHECK(index.find("\"B*\": \"B_m.pbm\"") != std::string::npos);
  CHECK(index.find("\"_\": \"SIL.pbm\"") != std::string::npos);
  CHECK(index.find("\"format\": \"pbm\"") != std::string::npos);
}

TEST_CASE("cell layout") {
  CHECK(cell_layout(32).tone_strip == 8);
  CHECK_THROWS_AS(cell_layout(7), GlyphError);
  CHECK_THROWS_AS(cell_layout(513), GlyphError);
  auto side = block_slots(parse_tokens("G+A")[0][0], 32);
  CHECK(side.onset.x == 1);
  CHECK(side.onset.w == 14);
  CHECK(side.nucleus.x == 17);
  CHECK_FALSE(side.coda);
  auto stack = block_slots(parse_tokens("G+O+N")[0][0], 30);
  CHECK(stack.onset.h == 8);
  CHECK(stack.nucleus.y == 11);
  REQUIRE(stack.coda);
  CHECK(stack.coda->y == 21);
  CHECK(stack.coda->h == 8);
}

TEST_CASE("render examples") {
  const auto& a = base_atlas();
  auto empty = render_text({}, a, 32);
  CHECK(empty.width() == 0);
  CHECK(empty.height() == 0);

  auto one = render_text(parse_tokens("H+A"), a, 32);
  CHECK(one.width() == 32);
  CHECK(one.height() == 40);
  auto left = crop(one, 0, 8, 16, 32), right = crop(one, 16, 8, 16, 32);
  CHECK(left.ink_count() > 0);
  CHECK(right.ink_count() > 0);
  CHECK(crop(one, 0, 0, 32, 8).ink_count() == 0);

  CHECK_THROWS_AS(render_text(parse_tokens("B*+A"), a, 32), GlyphError);
}

TEST_CASE("render matches the reference compositor") {
  const auto& a = base_atlas();
  for (int s : {8, 17, 32, 48}) {
    CAPTURE(s);
    auto text = parse_tokens("N+I . H+A . NG+O / G+O+N . S+_ . B+WA+R");
    auto got = render_text(text, a, s);
    auto want = composite(text, a, s);
    // Tone strips are empty here, so the compositor covers every pixel.
    CHECK(got == want);
  }
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    BlockText text{{oracle::random_block(rng, false), oracle::random_block(rng, false)}};
    bool plain = true;
    for (const auto& b : text[0]) plain = plain && !b.has_modifier();
    if (!plain) continue;
    CHECK(render_text(text, a, 24) == composite(text, a, 24));
  }
}

TEST_CASE("tone marks") {
  const auto& a = base_atlas();
  for (int tone = 1; tone <= 5; ++tone) {
    CAPTURE(tone);
    auto toned = render_text(parse_tokens("N+I" + std::to_string(tone)), a, 32);
    auto strip = crop(toned, 0, 0, 32, 8);
    if (tone == 5) {
      CHECK(strip.ink_count() == 4);
      CHECK(strip.get(15, 3));
      CHECK(strip.get(16, 4));
    } else {
      // n ticks of length T-2 = 6, each a rising diagonal.
      CHECK(static_cast<int>(strip.ink_count()) == 6 * tone);
      for (int k = 0; k < tone; ++k) {
        const int sx = 1 + k * 7;
        for (int i = 0; i < 6; ++i) CHECK(strip.get(sx + i, 6 - i));
      }
    }
    CHECK(crop(toned, 0, 8, 32, 32) == crop(render_text(parse_tokens("N+I"), a, 32), 0, 8, 32, 32));
  }
}

TEST_CASE("render_text output is independent of the tone strip content of other cells") {
  const auto& a = base_atlas();
  auto page = render_text(parse_tokens("N+I3 . H+A3 / NG+O3"), a, 16);
  CHECK(page.width() == 16 * 4);
  CHECK(crop(page, 32, 0, 16, 20).ink_count() == 0);
}
