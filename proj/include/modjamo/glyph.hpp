#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace modjamo {

inline constexpr int kMaxGlyphSide = 256;

struct Pixel {
  int x;
  int y;
  friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// Row-major scan order: top to bottom, then left to right.
inline bool scan_before(Pixel a, Pixel b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

/// Binary raster, 1 = ink. Any size is allowed for pages; single glyphs
/// are checked by validate_glyph.
class GlyphBitmap {
 public:
  GlyphBitmap() = default;
  GlyphBitmap(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool get(int x, int y) const { return bits_[index(x, y)] != 0; }
  bool get(Pixel p) const { return get(p.x, p.y); }
  void set(int x, int y, bool ink = true) { bits_[index(x, y)] = ink ? 1 : 0; }
  void set(Pixel p, bool ink = true) { set(p.x, p.y, ink); }

  std::size_t ink_count() const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const GlyphBitmap&, const GlyphBitmap&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Throws GlyphError unless 1 <= width, height <= 256 and some pixel is ink.
void validate_glyph(const GlyphBitmap& glyph);

/// Parses P1 or P4 PBM of any size (blank allowed). Throws GlyphError.
GlyphBitmap parse_pbm(std::string_view bytes);
/// parse_pbm followed by validate_glyph.
GlyphBitmap load_glyph(std::string_view bytes);
GlyphBitmap load_glyph_file(const std::filesystem::path& path);

enum class PbmFormat { ascii, binary };
std::string to_pbm(const GlyphBitmap& bitmap, PbmFormat format);
void save_pbm(const std::filesystem::path& path, const GlyphBitmap& bitmap, PbmFormat format);

struct PixelCluster {
  std::vector<Pixel> pixels;  // in scan order
};

/// Maximal 8-connected ink clusters, ordered by their first pixel in scan order.
std::vector<PixelCluster> connected_components(const GlyphBitmap& bitmap);

/// Iterative boundary-peeling (Zhang-Suen) thinning.
GlyphBitmap skeletonize(const GlyphBitmap& bitmap);

enum class StrokeDirection { rightward, downward, diagonal };
std::string_view direction_name(StrokeDirection d);

struct StrokeSegment {
  std::vector<Pixel> path;  // monotone along the direction's primary axis
  StrokeDirection direction = StrokeDirection::rightward;
  double thickness = 0.0;   // mean perpendicular ink run through the path
};

/// Splits the skeleton of `cluster` into maximal directional strokes.
std::vector<StrokeSegment> cluster_strokes(const GlyphBitmap& glyph, const PixelCluster& cluster);

/// Consonant finder: the cluster holding the first ink pixel in scan order,
/// then the best of its strokes (rightward > downward > diagonal, then
/// longer, then earlier start).
StrokeSegment find_target_consonant_stroke(const GlyphBitmap& glyph);

/// Vowel finder: the longest maximal horizontal or vertical ink run; ties go
/// to vertical, then to the earlier start.
StrokeSegment find_target_vowel_stroke(const GlyphBitmap& glyph);

/// Union of the glyph with the stroke dilated by a (2r+1)-square.
GlyphBitmap thicken_stroke(const GlyphBitmap& glyph, const StrokeSegment& stroke, int radius);

/// Like thicken_stroke with the radius ramping linearly along the path.
GlyphBitmap taper_stroke(const GlyphBitmap& glyph, const StrokeSegment& stroke, int start_width,
                         int end_width);

/// Per-path-position radii used by taper_stroke.
std::vector<int> taper_radii(std::size_t path_length, int start_width, int end_width);

}  // namespace modjamo
