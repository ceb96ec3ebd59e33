#include <algorithm>

#include "modjamo/atlas.hpp"
#include "modjamo/error.hpp"

namespace modjamo {

bool stacks_vertically(Jamo v) {
  switch (v) {
    case Jamo::O: case Jamo::YO: case Jamo::U: case Jamo::YU: case Jamo::EU: case Jamo::SIL:
      return true;
    default:
      return false;
  }
}

CellLayout cell_layout(int cell_size) {
  if (cell_size < 8 || cell_size > 512)
    throw GlyphError("cell size must be within 8..512, got " + std::to_string(cell_size));
  return {cell_size, cell_size / 4};
}

namespace {

Rect inset(Rect r) { return {r.x + 1, r.y + 1, r.w - 2, r.h - 2}; }

std::string glyph_key(const JamoToken& t) { return t.name(); }

}  // namespace

BlockSlots block_slots(const SyllableBlock& block, int cell_size) {
  const int s = cell_layout(cell_size).cell;
  const int body = block.coda() ? s * 2 / 3 : s;
  BlockSlots slots{};
  if (stacks_vertically(block.nucleus().base())) {
    slots.onset = inset({0, 0, s, body / 2});
    slots.nucleus = inset({0, body / 2, s, body - body / 2});
  } else {
    slots.onset = inset({0, 0, s / 2, body});
    slots.nucleus = inset({s / 2, 0, s - s / 2, body});
  }
  if (block.coda()) slots.coda = inset({0, body, s, s - body});
  return slots;
}

void paste_scaled(GlyphBitmap& page, const GlyphBitmap& glyph, const Rect& r) {
  if (r.w < 1 || r.h < 1 || glyph.width() < 1 || glyph.height() < 1) return;
  for (int j = 0; j < r.h; ++j) {
    const int sy = j * glyph.height() / r.h;
    for (int i = 0; i < r.w; ++i) {
      const int sx = i * glyph.width() / r.w;
      if (glyph.get(sx, sy) && page.in_bounds(r.x + i, r.y + j)) page.set(r.x + i, r.y + j);
    }
  }
}

void draw_tone_mark(GlyphBitmap& page, int x0, int tone, int cell_size) {
  const auto layout = cell_layout(cell_size);
  const int t = layout.tone_strip;
  const auto put = [&](int x, int y) {
    if (x >= x0 && x < x0 + layout.cell && page.in_bounds(x, y)) page.set(x, y);
  };
  if (tone == 5) {
    const int cx = x0 + layout.cell / 2 - 1;
    const int cy = t / 2 - 1;
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) put(cx + dx, cy + dy);
    return;
  }
  if (tone < 1 || tone > 4) return;
  const int len = std::max(1, t - 2);
  for (int k = 0; k < tone; ++k) {
    const int sx = x0 + 1 + k * (len + 1);
    for (int i = 0; i < len; ++i) put(sx + i, std::max(0, t - 2 - i));
  }
}

GlyphBitmap render_text(const BlockText& text, const GlyphAtlas& atlas, int cell_size) {
  const auto layout = cell_layout(cell_size);
  std::size_t cells = 0;
  for (std::size_t w = 0; w < text.size(); ++w) cells += text[w].size() + (w ? 1 : 0);
  if (cells == 0) return GlyphBitmap();

  // Resolve every glyph before drawing so a missing one fails cleanly.
  for (const auto& word : text)
    for (const auto& b : word) {
      (void)atlas.at(glyph_key(b.onset()));
      (void)atlas.at(glyph_key(b.nucleus()));
      if (b.coda()) (void)atlas.at(glyph_key(*b.coda()));
    }

  const int s = layout.cell;
  GlyphBitmap page(static_cast<int>(cells) * s, layout.tone_strip + s);
  int cell = 0;
  for (std::size_t w = 0; w < text.size(); ++w) {
    if (w) ++cell;
    for (const auto& b : text[w]) {
      const int x0 = cell * s;
      const int y0 = layout.tone_strip;
      const auto slots = block_slots(b, s);
      const auto place = [&](Rect r) { return Rect{r.x + x0, r.y + y0, r.w, r.h}; };
      paste_scaled(page, atlas.at(glyph_key(b.onset())), place(slots.onset));
      paste_scaled(page, atlas.at(glyph_key(b.nucleus())), place(slots.nucleus));
      if (b.coda()) paste_scaled(page, atlas.at(glyph_key(*b.coda())), place(*slots.coda));
      if (b.tone()) draw_tone_mark(page, x0, b.tone(), s);
      ++cell;
    }
  }
  return page;
}

}  // namespace modjamo
