#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modjamo/glyph.hpp"
#include "modjamo/jamo.hpp"

namespace modjamo {

/// One synthesized variant: which token to build and how.
struct AtlasVariant {
  enum class Op { thicken, taper };
  std::string token;  // "B*", "A^"
  Op op = Op::thicken;
  int radius = 1;     // thicken
  int start = 1;      // taper
  int end = 1;
};

struct AtlasManifest {
  std::vector<AtlasVariant> variants;
};

/// {"variants": [{"token": "B*", "op": "thicken", "radius": 2},
///               {"token": "A^", "op": "taper", "start": 1, "end": 3}]}
AtlasManifest parse_manifest(std::string_view json);
AtlasManifest load_manifest_file(const std::filesystem::path& path);

/// "B" -> "B.pbm", "B*" -> "B_m.pbm", "A^" -> "A_r.pbm", "_" -> "SIL.pbm".
std::string glyph_file_name(std::string_view token);

/// Token name to bitmap; keys use the serialization names ("_" for SIL).
class GlyphAtlas {
 public:
  using Map = std::map<std::string, GlyphBitmap, std::less<>>;
  const Map& glyphs() const noexcept { return glyphs_; }
  const GlyphBitmap* find(std::string_view token) const;
  const GlyphBitmap& at(std::string_view token) const;  // throws GlyphError
  void insert(std::string token, GlyphBitmap glyph);

  friend bool operator==(const GlyphAtlas&, const GlyphAtlas&) = default;

 private:
  Map glyphs_;
};

/// Name of every base token an atlas needs: 19 consonants, 21 vowels, "_".
std::vector<std::string> base_glyph_tokens();

/// Loads every base glyph from `base_dir` and synthesizes the manifest's
/// variants in manifest order. Throws GlyphError or TokenError.
GlyphAtlas build_atlas(const std::filesystem::path& base_dir, const AtlasManifest& manifest);

/// Derives one variant glyph from its base glyph.
GlyphBitmap synthesize_variant(const GlyphBitmap& base, const JamoToken& token,
                               const AtlasVariant& variant);

/// Writes one ASCII PBM per glyph plus atlas.json (token -> file name).
void write_atlas(const GlyphAtlas& atlas, const std::filesystem::path& out_dir);
std::string atlas_index_json(const GlyphAtlas& atlas);
GlyphAtlas load_atlas(const std::filesystem::path& dir);

/// Horizontal-vowel blocks stack onset over nucleus; others sit side by side.
bool stacks_vertically(Jamo nucleus);

struct CellLayout {
  int cell;        // S
  int tone_strip;  // S / 4, above every cell
};
CellLayout cell_layout(int cell_size);

struct Rect {
  int x, y, w, h;
};

/// Slot rectangles inside one S x S cell (relative to the cell origin,
/// already inset by one pixel).
struct BlockSlots {
  Rect onset;
  Rect nucleus;
  std::optional<Rect> coda;
};
BlockSlots block_slots(const SyllableBlock& block, int cell_size);

/// Nearest-neighbour scaling of `glyph` into `rect` of `page` (OR-ed).
void paste_scaled(GlyphBitmap& page, const GlyphBitmap& glyph, const Rect& rect);

/// Draws the tone mark for `tone` (1..5) in the strip above a cell whose
/// left edge is `x0`.
void draw_tone_mark(GlyphBitmap& page, int x0, int tone, int cell_size);

/// One cell per block, left to right, one empty cell between words. Page
/// height is the tone strip plus the cell; an empty text gives a 0x0 page.
GlyphBitmap render_text(const BlockText& text, const GlyphAtlas& atlas, int cell_size);

}  // namespace modjamo
