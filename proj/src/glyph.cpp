#include "modjamo/glyph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "modjamo/error.hpp"

namespace modjamo {

namespace {

constexpr int kMaxPbmSide = 1 << 15;

// E, S, W, N first so walks prefer 4-connected steps.
constexpr std::array<Pixel, 8> kWalkOrder = {
    Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}, Pixel{0, -1},
    Pixel{1, 1}, Pixel{-1, 1}, Pixel{1, -1}, Pixel{-1, -1},
};

}  // namespace

GlyphBitmap::GlyphBitmap(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw GlyphError("negative bitmap dimension");
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t GlyphBitmap::ink_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void validate_glyph(const GlyphBitmap& g) {
  if (g.width() < 1 || g.height() < 1 || g.width() > kMaxGlyphSide || g.height() > kMaxGlyphSide)
    throw GlyphError("glyph dimensions must be within 1.." + std::to_string(kMaxGlyphSide) +
                     ", got " + std::to_string(g.width()) + "x" + std::to_string(g.height()));
  if (g.ink_count() == 0) throw GlyphError("glyph has no ink");
}

// ---------------------------------------------------------------------------
// PBM

namespace {

class PbmReader {
 public:
  explicit PbmReader(std::string_view bytes) : s_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      const auto c = static_cast<unsigned char>(s_[pos_]);
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int read_int(const char* what) {
    skip_space_and_comments();
    const auto start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > kMaxPbmSide) throw GlyphError(std::string("PBM ") + what + " too large");
      ++pos_;
    }
    if (pos_ == start) throw GlyphError(std::string("malformed PBM header: expected ") + what);
    return static_cast<int>(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GlyphBitmap parse_pbm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
    throw GlyphError("malformed PBM header: expected P1 or P4");
  const bool ascii = bytes[1] == '1';
  PbmReader r(bytes);
  r.pos_ = 2;
  if (r.pos_ < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[r.pos_])) &&
      bytes[r.pos_] != '#')
    throw GlyphError("malformed PBM header: bad magic");
  const int w = r.read_int("width");
  const int h = r.read_int("height");
  GlyphBitmap bm(w, h);
  if (ascii) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        r.skip_space_and_comments();
        if (r.pos_ >= bytes.size()) throw GlyphError("truncated PBM data");
        const char c = bytes[r.pos_++];
        if (c != '0' && c != '1') throw GlyphError("invalid PBM pixel value");
        bm.set(x, y, c == '1');
      }
    }
    return bm;
  }
  if (r.pos_ >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[r.pos_])))
    throw GlyphError("malformed PBM header: missing separator");
  ++r.pos_;
  const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
  if (bytes.size() - r.pos_ < row_bytes * static_cast<std::size_t>(h))
    throw GlyphError("truncated PBM data");
  for (int y = 0; y < h; ++y) {
    const auto* row = reinterpret_cast<const unsigned char*>(bytes.data()) + r.pos_ +
                      row_bytes * static_cast<std::size_t>(y);
    for (int x = 0; x < w; ++x) bm.set(x, y, (row[x / 8] >> (7 - x % 8)) & 1);
  }
  return bm;
}

GlyphBitmap load_glyph(std::string_view bytes) {
  auto bm = parse_pbm(bytes);
  validate_glyph(bm);
  return bm;
}

GlyphBitmap load_glyph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GlyphError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load_glyph(ss.str());
  } catch (const GlyphError& e) {
    throw GlyphError(path.string() + ": " + e.what());
  }
}

std::string to_pbm(const GlyphBitmap& bm, PbmFormat format) {
  std::string out = format == PbmFormat::ascii ? "P1\n" : "P4\n";
  out += std::to_string(bm.width()) + " " + std::to_string(bm.height()) + "\n";
  if (format == PbmFormat::ascii) {
    for (int y = 0; y < bm.height(); ++y) {
      for (int x = 0; x < bm.width(); ++x) {
        if (x) out += ' ';
        out += bm.get(x, y) ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }
  const std::size_t row_bytes = (static_cast<std::size_t>(bm.width()) + 7) / 8;
  for (int y = 0; y < bm.height(); ++y) {
    std::string row(row_bytes, '\0');
    for (int x = 0; x < bm.width(); ++x)
      if (bm.get(x, y)) row[x / 8] = static_cast<char>(row[x / 8] | (0x80 >> (x % 8)));
    out += row;
  }
  return out;
}

void save_pbm(const std::filesystem::path& path, const GlyphBitmap& bm, PbmFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GlyphError("cannot write " + path.string());
  const auto data = to_pbm(bm, format);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw GlyphError("cannot write " + path.string());
}

// ---------------------------------------------------------------------------
// Components

namespace {

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<PixelCluster> connected_components(const GlyphBitmap& bm) {
  const int w = bm.width();
  const int h = bm.height();
  std::vector<int> label(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), -1);
  const auto at = [&](int x, int y) -> int& { return label[static_cast<std::size_t>(y) * w + x]; };
  UnionFind uf;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!bm.get(x, y)) continue;
      int current = -1;
      for (const auto& [dx, dy] : {std::pair{-1, 0}, {-1, -1}, {0, -1}, {1, -1}}) {
        const int nx = x + dx, ny = y + dy;
        if (!bm.in_bounds(nx, ny) || at(nx, ny) < 0) continue;
        if (current < 0) current = at(nx, ny);
        else uf.unite(current, at(nx, ny));
      }
      at(x, y) = current < 0 ? uf.add() : current;
    }
  }
  std::vector<int> cluster_of(uf.parent.size(), -1);
  std::vector<PixelCluster> clusters;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (at(x, y) < 0) continue;
      const int root = uf.find(at(x, y));
      if (cluster_of[root] < 0) {
        cluster_of[root] = static_cast<int>(clusters.size());
        clusters.emplace_back();
      }
      clusters[cluster_of[root]].pixels.push_back({x, y});
    }
  }
  return clusters;
}

// ---------------------------------------------------------------------------
// Thinning

namespace {

// Ring P2..P9 clockwise from north.
constexpr std::array<Pixel, 8> kRing = {
    Pixel{0, -1}, Pixel{1, -1}, Pixel{1, 0}, Pixel{1, 1},
    Pixel{0, 1}, Pixel{-1, 1}, Pixel{-1, 0}, Pixel{-1, -1},
};

std::array<bool, 8> ring_of(const GlyphBitmap& bm, int x, int y) {
  std::array<bool, 8> r{};
  for (std::size_t i = 0; i < 8; ++i) {
    const int nx = x + kRing[i].x, ny = y + kRing[i].y;
    r[i] = bm.in_bounds(nx, ny) && bm.get(nx, ny);
  }
  return r;
}

int transitions(const std::array<bool, 8>& r) {
  int t = 0;
  for (std::size_t i = 0; i < 8; ++i)
    if (!r[i] && r[(i + 1) % 8]) ++t;
  return t;
}

}  // namespace

GlyphBitmap skeletonize(const GlyphBitmap& input) {
  GlyphBitmap bm = input;
  std::vector<Pixel> doomed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      doomed.clear();
      for (int y = 0; y < bm.height(); ++y) {
        for (int x = 0; x < bm.width(); ++x) {
          if (!bm.get(x, y)) continue;
          const auto r = ring_of(bm, x, y);
          const int n = static_cast<int>(std::count(r.begin(), r.end(), true));
          if (n < 2 || n > 6 || transitions(r) != 1) continue;
          // r[0]=P2 r[2]=P4 r[4]=P6 r[6]=P8
          if (pass == 0) {
            if (r[0] && r[2] && r[4]) continue;
            if (r[2] && r[4] && r[6]) continue;
          } else {
            if (r[0] && r[2] && r[6]) continue;
            if (r[0] && r[4] && r[6]) continue;
          }
          doomed.push_back({x, y});
        }
      }
      if (doomed.empty()) continue;
      // A pass may erase a whole small cluster (a 2x2 block); keep its first pixel.
      GlyphBitmap marked(bm.width(), bm.height());
      for (const auto p : doomed) marked.set(p);
      for (const auto& c : connected_components(bm)) {
        const bool all = std::all_of(c.pixels.begin(), c.pixels.end(),
                                     [&](Pixel p) { return marked.get(p); });
        if (all) marked.set(c.pixels.front(), false);
      }
      for (const auto p : doomed)
        if (marked.get(p)) {
          bm.set(p, false);
          changed = true;
        }
    }
  }
  return bm;
}

// ---------------------------------------------------------------------------
// Strokes

std::string_view direction_name(StrokeDirection d) {
  switch (d) {
    case StrokeDirection::rightward: return "rightward";
    case StrokeDirection::downward: return "downward";
    case StrokeDirection::diagonal: return "diagonal";
  }
  return "?";
}

namespace {

int ink_run(const GlyphBitmap& g, Pixel p, int dx, int dy) {
  if (!g.in_bounds(p.x, p.y) || !g.get(p)) return 0;
  int n = 1;
  for (int s : {1, -1}) {
    int x = p.x + s * dx, y = p.y + s * dy;
    while (g.in_bounds(x, y) && g.get(x, y)) {
      ++n;
      x += s * dx;
      y += s * dy;
    }
  }
  return n;
}

double estimate_thickness(const GlyphBitmap& g, const StrokeSegment& s) {
  if (s.path.empty()) return 0.0;
  int px = 0, py = 1;
  if (s.direction == StrokeDirection::downward) {
    px = 1;
    py = 0;
  } else if (s.direction == StrokeDirection::diagonal) {
    const bool down_right = s.path.back().x >= s.path.front().x;
    px = 1;
    py = down_right ? -1 : 1;
  }
  double sum = 0;
  for (const auto p : s.path) sum += ink_run(g, p, px, py);
  return sum / static_cast<double>(s.path.size());
}

StrokeSegment make_segment(std::vector<Pixel> path) {
  StrokeSegment s;
  if (path.size() > 1) {
    const int dx = path.back().x - path.front().x;
    const int dy = path.back().y - path.front().y;
    if (std::abs(dx) > std::abs(dy)) {
      s.direction = StrokeDirection::rightward;
      if (dx < 0) std::reverse(path.begin(), path.end());
    } else if (std::abs(dy) > std::abs(dx)) {
      s.direction = StrokeDirection::downward;
      if (dy < 0) std::reverse(path.begin(), path.end());
    } else if (dx != 0) {
      s.direction = StrokeDirection::diagonal;
      if (dy < 0) std::reverse(path.begin(), path.end());
    }
  }
  s.path = std::move(path);
  return s;
}

struct Run {
  std::size_t begin;  // pixel indices, inclusive
  std::size_t end;
  Pixel step;
};

bool same_step(Pixel a, Pixel b) { return a.x == b.x && a.y == b.y; }

// Splits a walked path into maximal runs of one step vector, then absorbs
// single-step wiggles that do not reverse an axis-aligned run.
std::vector<Run> split_runs(const std::vector<Pixel>& path) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Pixel step{path[i + 1].x - path[i].x, path[i + 1].y - path[i].y};
    if (!runs.empty() && same_step(runs.back().step, step)) {
      runs.back().end = i + 1;
    } else {
      runs.push_back({i, i + 1, step});
    }
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
      const auto& a = runs[k - 1];
      const auto& w = runs[k];
      const auto& b = runs[k + 1];
      if (w.end - w.begin != 1 || !same_step(a.step, b.step)) continue;
      const bool axis_aligned = (a.step.x == 0) != (a.step.y == 0);
      if (!axis_aligned) continue;
      const int along = a.step.x != 0 ? w.step.x * a.step.x : w.step.y * a.step.y;
      if (along < 0) continue;
      runs[k - 1].end = b.end;
      runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(k), runs.begin() + static_cast<std::ptrdiff_t>(k) + 2);
      merged = true;
      break;
    }
  }
  return runs;
}

int direction_rank(StrokeDirection d) { return static_cast<int>(d); }

bool better_stroke(const StrokeSegment& a, const StrokeSegment& b) {
  if (a.direction != b.direction) return direction_rank(a.direction) < direction_rank(b.direction);
  if (a.path.size() != b.path.size()) return a.path.size() > b.path.size();
  return scan_before(a.path.front(), b.path.front());
}

}  // namespace

std::vector<StrokeSegment> cluster_strokes(const GlyphBitmap& glyph, const PixelCluster& cluster) {
  if (cluster.pixels.empty()) throw GlyphError("empty pixel cluster");
  GlyphBitmap mask(glyph.width(), glyph.height());
  for (const auto p : cluster.pixels) mask.set(p);
  GlyphBitmap skel = skeletonize(mask);
  if (skel.ink_count() == 0) skel.set(cluster.pixels.front());

  const auto is_skel = [&](int x, int y) { return skel.in_bounds(x, y) && skel.get(x, y); };

  // Junction pixels split the skeleton into chains.
  GlyphBitmap chain(skel.width(), skel.height());
  std::vector<Pixel> chain_pixels;
  for (int y = 0; y < skel.height(); ++y) {
    for (int x = 0; x < skel.width(); ++x) {
      if (!skel.get(x, y)) continue;
      if (transitions(ring_of(skel, x, y)) >= 3) continue;
      chain.set(x, y);
      chain_pixels.push_back({x, y});
    }
  }
  if (chain_pixels.empty()) {
    for (int y = 0; y < skel.height() && chain_pixels.empty(); ++y)
      for (int x = 0; x < skel.width(); ++x)
        if (is_skel(x, y)) {
          chain.set(x, y);
          chain_pixels.push_back({x, y});
          break;
        }
  }

  GlyphBitmap visited(skel.width(), skel.height());
  const auto open_neighbors = [&](Pixel p) {
    int n = 0;
    for (const auto d : kWalkOrder) {
      const int nx = p.x + d.x, ny = p.y + d.y;
      if (chain.in_bounds(nx, ny) && chain.get(nx, ny) && !visited.get(nx, ny)) ++n;
    }
    return n;
  };

  std::vector<std::vector<Pixel>> paths;
  std::size_t remaining = chain_pixels.size();
  while (remaining > 0) {
    const Pixel* start = nullptr;
    for (const auto& p : chain_pixels) {
      if (visited.get(p) || open_neighbors(p) > 1) continue;
      start = &p;
      break;
    }
    if (!start) {
      for (const auto& p : chain_pixels)
        if (!visited.get(p)) {
          start = &p;
          break;
        }
    }
    std::vector<Pixel> path{*start};
    visited.set(*start);
    --remaining;
    for (;;) {
      const Pixel cur = path.back();
      bool moved = false;
      for (const auto d : kWalkOrder) {
        const int nx = cur.x + d.x, ny = cur.y + d.y;
        if (!chain.in_bounds(nx, ny) || !chain.get(nx, ny) || visited.get(nx, ny)) continue;
        path.push_back({nx, ny});
        visited.set(nx, ny);
        --remaining;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    paths.push_back(std::move(path));
  }

  std::vector<StrokeSegment> strokes;
  for (const auto& path : paths) {
    if (path.size() == 1) {
      strokes.push_back(make_segment(path));
      continue;
    }
    for (const auto& run : split_runs(path)) {
      std::vector<Pixel> px(path.begin() + static_cast<std::ptrdiff_t>(run.begin),
                            path.begin() + static_cast<std::ptrdiff_t>(run.end) + 1);
      strokes.push_back(make_segment(std::move(px)));
    }
  }
  for (auto& s : strokes) s.thickness = estimate_thickness(glyph, s);
  return strokes;
}

StrokeSegment find_target_consonant_stroke(const GlyphBitmap& glyph) {
  if (glyph.ink_count() == 0) throw GlyphError("glyph has no ink");
  const auto clusters = connected_components(glyph);
  const auto strokes = cluster_strokes(glyph, clusters.front());
  return *std::min_element(strokes.begin(), strokes.end(), better_stroke);
}

StrokeSegment find_target_vowel_stroke(const GlyphBitmap& glyph) {
  if (glyph.ink_count() == 0) throw GlyphError("glyph has no ink");
  struct Best {
    int length = 0;
    bool vertical = false;
    Pixel start{0, 0};
  } best;
  const auto consider = [&](int length, bool vertical, Pixel start) {
    const bool wins = length > best.length ||
                      (length == best.length && vertical && !best.vertical) ||
                      (length == best.length && vertical == best.vertical &&
                       scan_before(start, best.start));
    if (wins) best = {length, vertical, start};
  };
  for (int y = 0; y < glyph.height(); ++y) {
    for (int x = 0; x < glyph.width();) {
      if (!glyph.get(x, y)) {
        ++x;
        continue;
      }
      int x2 = x;
      while (x2 < glyph.width() && glyph.get(x2, y)) ++x2;
      consider(x2 - x, false, {x, y});
      x = x2;
    }
  }
  for (int x = 0; x < glyph.width(); ++x) {
    for (int y = 0; y < glyph.height();) {
      if (!glyph.get(x, y)) {
        ++y;
        continue;
      }
      int y2 = y;
      while (y2 < glyph.height() && glyph.get(x, y2)) ++y2;
      consider(y2 - y, true, {x, y});
      y = y2;
    }
  }
  StrokeSegment s;
  s.direction = best.vertical ? StrokeDirection::downward : StrokeDirection::rightward;
  for (int i = 0; i < best.length; ++i)
    s.path.push_back(best.vertical ? Pixel{best.start.x, best.start.y + i}
                                   : Pixel{best.start.x + i, best.start.y});
  s.thickness = estimate_thickness(glyph, s);
  return s;
}

// ---------------------------------------------------------------------------
// Modifiers

namespace {

void check_stroke(const GlyphBitmap& glyph, const StrokeSegment& stroke) {
  validate_glyph(glyph);
  if (stroke.path.empty()) throw GlyphError("empty stroke");
  for (const auto p : stroke.path)
    if (!glyph.in_bounds(p.x, p.y) || !glyph.get(p))
      throw GlyphError("stroke pixel (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                       ") is not ink in the glyph");
}

void check_radius(const GlyphBitmap& glyph, int r, const char* what) {
  const int limit = std::min(glyph.width(), glyph.height());
  if (r < 1 || r > limit)
    throw GlyphError(std::string(what) + " must be within 1.." + std::to_string(limit) +
                     ", got " + std::to_string(r));
}

// 1-D max filter over a 0/1 line using a prefix count.
void dilate_line(std::vector<int>& line, int r) {
  const int n = static_cast<int>(line.size());
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + line[i];
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - r);
    const int hi = std::min(n, i + r + 1);
    line[i] = prefix[hi] - prefix[lo] > 0 ? 1 : 0;
  }
}

}  // namespace

GlyphBitmap thicken_stroke(const GlyphBitmap& glyph, const StrokeSegment& stroke, int radius) {
  check_stroke(glyph, stroke);
  check_radius(glyph, radius, "radius");
  const int w = glyph.width(), h = glyph.height();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(h), std::vector<int>(w, 0));
  for (const auto p : stroke.path) rows[p.y][p.x] = 1;
  for (auto& row : rows) dilate_line(row, radius);
  GlyphBitmap out = glyph;
  std::vector<int> col(static_cast<std::size_t>(h));
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) col[y] = rows[y][x];
    dilate_line(col, radius);
    for (int y = 0; y < h; ++y)
      if (col[y]) out.set(x, y);
  }
  return out;
}

std::vector<int> taper_radii(std::size_t n, int start_width, int end_width) {
  std::vector<int> radii(n, start_width);
  if (n < 2) return radii;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    radii[i] = static_cast<int>(std::lround(start_width + (end_width - start_width) * t));
  }
  return radii;
}

GlyphBitmap taper_stroke(const GlyphBitmap& glyph, const StrokeSegment& stroke, int start_width,
                         int end_width) {
  check_stroke(glyph, stroke);
  check_radius(glyph, start_width, "start width");
  check_radius(glyph, end_width, "end width");
  const auto radii = taper_radii(stroke.path.size(), start_width, end_width);
  GlyphBitmap out = glyph;
  for (std::size_t i = 0; i < stroke.path.size(); ++i) {
    const auto p = stroke.path[i];
    const int r = radii[i];
    for (int y = std::max(0, p.y - r); y <= std::min(glyph.height() - 1, p.y + r); ++y)
      for (int x = std::max(0, p.x - r); x <= std::min(glyph.width() - 1, p.x + r); ++x)
        out.set(x, y);
  }
  return out;
}

}  // namespace modjamo
