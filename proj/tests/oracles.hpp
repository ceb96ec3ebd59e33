#pragma once

// Reference implementations the library is checked against. They are
// deliberately naive: brute force over pixels, splits or paths.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modjamo/atlas.hpp"
#include "modjamo/glyph.hpp"
#include "modjamo/jamo.hpp"

namespace oracle {

using namespace modjamo;

// --- bitmaps ---------------------------------------------------------------

inline GlyphBitmap random_bitmap(std::mt19937& rng, int w, int h, double density) {
  std::bernoulli_distribution ink(density);
  GlyphBitmap b(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) b.set(x, y, ink(rng));
  return b;
}

inline GlyphBitmap from_rows(const std::vector<std::string>& rows) {
  GlyphBitmap b(static_cast<int>(rows.at(0).size()), static_cast<int>(rows.size()));
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) b.set(x, y, rows[y][x] == '#');
  return b;
}

// Recursive-free flood fill from every unvisited ink pixel in scan order.
inline std::vector<std::vector<Pixel>> flood_fill(const GlyphBitmap& b) {
  std::vector<std::vector<int>> seen(b.height(), std::vector<int>(b.width(), 0));
  std::vector<std::vector<Pixel>> out;
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      if (!b.get(x, y) || seen[y][x]) continue;
      std::vector<Pixel> comp, stack{{x, y}};
      seen[y][x] = 1;
      while (!stack.empty()) {
        Pixel p = stack.back();
        stack.pop_back();
        comp.push_back(p);
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            int nx = p.x + dx, ny = p.y + dy;
            if (b.in_bounds(nx, ny) && b.get(nx, ny) && !seen[ny][nx]) {
              seen[ny][nx] = 1;
              stack.push_back({nx, ny});
            }
          }
      }
      std::sort(comp.begin(), comp.end(), scan_before);
      out.push_back(comp);
    }
  return out;
}

inline int chebyshev(Pixel a, Pixel b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

// Per-pixel radius test against every path position.
inline GlyphBitmap dilate_path(const GlyphBitmap& glyph, const std::vector<Pixel>& path,
                               const std::vector<int>& radii) {
  GlyphBitmap out = glyph;
  for (int y = 0; y < glyph.height(); ++y)
    for (int x = 0; x < glyph.width(); ++x)
      for (std::size_t i = 0; i < path.size(); ++i)
        if (chebyshev({x, y}, path[i]) <= radii[i]) {
          out.set(x, y);
          break;
        }
  return out;
}

inline GlyphBitmap thicken(const GlyphBitmap& glyph, const std::vector<Pixel>& path, int r) {
  return dilate_path(glyph, path, std::vector<int>(path.size(), r));
}

// Closed-form ramp of box half-widths: start + (end - start) * i / (n - 1), rounded half up.
inline std::vector<int> ramp_radii(std::size_t n, int start, int end) {
  std::vector<int> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    r[i] = static_cast<int>(std::floor(start + (end - start) * t + 0.5));
  }
  return r;
}

struct Run {
  Pixel start;
  int length;
  bool vertical;
};

// Every maximal horizontal and vertical ink run.
inline std::vector<Run> maximal_runs(const GlyphBitmap& b) {
  std::vector<Run> runs;
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      if (!b.get(x, y)) continue;
      if (x == 0 || !b.get(x - 1, y)) {
        int n = 0;
        while (x + n < b.width() && b.get(x + n, y)) ++n;
        runs.push_back({{x, y}, n, false});
      }
      if (y == 0 || !b.get(x, y - 1)) {
        int n = 0;
        while (y + n < b.height() && b.get(x, y + n)) ++n;
        runs.push_back({{x, y}, n, true});
      }
    }
  return runs;
}

inline Run best_vowel_run(const GlyphBitmap& b) {
  auto runs = maximal_runs(b);
  return *std::min_element(runs.begin(), runs.end(), [](const Run& a, const Run& c) {
    if (a.length != c.length) return a.length > c.length;
    if (a.vertical != c.vertical) return a.vertical;
    return scan_before(a.start, c.start);
  });
}

// --- render compositor -------------------------------------------------------

// Pastes each glyph by sampling src[(y * gh) / h][(x * gw) / w] with a fresh loop per slot.
inline void paste(GlyphBitmap& page, const GlyphBitmap& g, int x0, int y0, int w, int h) {
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (g.get(x * g.width() / w, y * g.height() / h)) page.set(x0 + x, y0 + y);
}

// --- jamo streams --------------------------------------------------------------

// Tries every split of the stream into C V C? T? blocks. Returns all parses
// (legal streams have exactly one because every block needs an onset).
inline void all_parses(const std::vector<JamoSymbol>& s, std::size_t pos,
                       std::vector<SyllableBlock>& cur,
                       std::vector<std::vector<SyllableBlock>>& out) {
  if (pos == s.size()) {
    out.push_back(cur);
    return;
  }
  auto tok = [&](std::size_t i) -> const JamoToken* {
    return i < s.size() ? std::get_if<JamoToken>(&s[i]) : nullptr;
  };
  auto tone = [&](std::size_t i) -> std::optional<int> {
    if (i < s.size())
      if (auto t = std::get_if<ToneMark>(&s[i])) return t->tone;
    return std::nullopt;
  };
  const JamoToken* on = tok(pos);
  const JamoToken* nu = tok(pos + 1);
  if (!on || !nu || !on->is_consonant() || !nu->is_vowel()) return;
  JamoToken onset = on->with_role(Role::onset);
  for (int with_coda = 0; with_coda <= 1; ++with_coda) {
    std::size_t p = pos + 2;
    std::optional<JamoToken> coda;
    if (with_coda) {
      const JamoToken* c = tok(p);
      if (!c || !c->is_consonant()) continue;
      coda = c->with_role(Role::coda);
      ++p;
    }
    for (int with_tone = 0; with_tone <= 1; ++with_tone) {
      std::size_t q = p;
      int t = 0;
      if (with_tone) {
        auto tt = tone(q);
        if (!tt) continue;
        t = *tt;
        ++q;
      }
      cur.emplace_back(onset, *nu, coda, t);
      all_parses(s, q, cur, out);
      cur.pop_back();
    }
  }
}

inline std::vector<std::vector<SyllableBlock>> segmentations(const std::vector<JamoSymbol>& s) {
  std::vector<SyllableBlock> cur;
  std::vector<std::vector<SyllableBlock>> parses;
  all_parses(s, 0, cur, parses);
  return parses;
}

inline JamoToken random_token(std::mt19937& rng, bool vowel, Role role) {
  const auto all = all_jamo();
  for (;;) {
    Jamo j = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    if (is_vowel(j) != vowel) continue;
    int m = std::uniform_int_distribution<int>(0, 3)(rng);
    if (vowel) {
      bool rhotic = m == 0 && j != Jamo::SIL;
      return JamoToken::vowel(j, rhotic);
    }
    return JamoToken::consonant(j, m == 0 && is_modifiable(j), role);
  }
}

inline SyllableBlock random_block(std::mt19937& rng, bool allow_tone = true) {
  auto onset = random_token(rng, false, Role::onset);
  auto nucleus = random_token(rng, true, Role::nucleus);
  std::optional<JamoToken> coda;
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    coda = random_token(rng, false, Role::coda);
  int tone = allow_tone ? std::uniform_int_distribution<int>(-6, 5)(rng) : 0;
  return SyllableBlock(onset, nucleus, coda, std::max(0, tone));
}

inline BlockText random_text(std::mt19937& rng, int max_words = 3, int max_blocks = 4) {
  BlockText text(std::uniform_int_distribution<int>(1, max_words)(rng));
  for (auto& w : text) {
    int n = std::uniform_int_distribution<int>(1, max_blocks)(rng);
    for (int i = 0; i < n; ++i) w.push_back(random_block(rng));
  }
  return text;
}

}  // namespace oracle
