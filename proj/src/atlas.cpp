#include "modjamo/atlas.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modjamo/error.hpp"

namespace modjamo {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GlyphError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int positive_int(const json& obj, const char* key, std::size_t index) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw GlyphError("manifest variant " + std::to_string(index) + ": '" + key +
                     "' must be an integer");
  const int v = it->get<int>();
  if (v < 1)
    throw GlyphError("manifest variant " + std::to_string(index) + ": '" + key + "' must be >= 1");
  return v;
}

}  // namespace

AtlasManifest parse_manifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GlyphError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GlyphError("manifest must be a JSON object");
  AtlasManifest m;
  const auto it = doc.find("variants");
  if (it == doc.end()) return m;
  if (!it->is_array()) throw GlyphError("manifest 'variants' must be an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& v = (*it)[i];
    if (!v.is_object() || !v.contains("token") || !v["token"].is_string() || !v.contains("op") ||
        !v["op"].is_string())
      throw GlyphError("manifest variant " + std::to_string(i) + " needs string 'token' and 'op'");
    AtlasVariant var;
    var.token = v["token"].get<std::string>();
    try {
      if (JamoToken::parse(var.token).is_plain())
        throw GlyphError("manifest variant " + std::to_string(i) + ": '" + var.token +
                         "' is not a modified or rhotic token");
    } catch (const TokenError& e) {
      throw GlyphError("manifest variant " + std::to_string(i) + ": " + e.what());
    }
    const auto op = v["op"].get<std::string>();
    if (op == "thicken") {
      var.op = AtlasVariant::Op::thicken;
      var.radius = positive_int(v, "radius", i);
    } else if (op == "taper") {
      var.op = AtlasVariant::Op::taper;
      var.start = positive_int(v, "start", i);
      var.end = positive_int(v, "end", i);
    } else {
      throw GlyphError("manifest variant " + std::to_string(i) + ": unknown op '" + op + "'");
    }
    m.variants.push_back(std::move(var));
  }
  return m;
}

AtlasManifest load_manifest_file(const std::filesystem::path& path) {
  return parse_manifest(read_file(path));
}

std::string glyph_file_name(std::string_view token) {
  if (token == "_") return "SIL.pbm";
  std::string out(token);
  if (!out.empty() && out.back() == '*') out.replace(out.size() - 1, 1, "_m");
  else if (!out.empty() && out.back() == '^') out.replace(out.size() - 1, 1, "_r");
  return out + ".pbm";
}

const GlyphBitmap* GlyphAtlas::find(std::string_view token) const {
  const auto it = glyphs_.find(token);
  return it == glyphs_.end() ? nullptr : &it->second;
}

const GlyphBitmap& GlyphAtlas::at(std::string_view token) const {
  if (const auto* g = find(token)) return *g;
  throw GlyphError("atlas has no glyph for " + std::string(token));
}

void GlyphAtlas::insert(std::string token, GlyphBitmap glyph) {
  glyphs_.insert_or_assign(std::move(token), std::move(glyph));
}

std::vector<std::string> base_glyph_tokens() {
  std::vector<std::string> out;
  for (const auto j : all_jamo()) out.push_back(j == Jamo::SIL ? "_" : std::string(jamo_name(j)));
  return out;
}

GlyphBitmap synthesize_variant(const GlyphBitmap& base, const JamoToken& token,
                               const AtlasVariant& v) {
  if (token.is_plain()) throw GlyphError(token.name() + " is not a modified or rhotic token");
  const auto stroke = token.is_consonant() ? find_target_consonant_stroke(base)
                                           : find_target_vowel_stroke(base);
  return v.op == AtlasVariant::Op::thicken ? thicken_stroke(base, stroke, v.radius)
                                           : taper_stroke(base, stroke, v.start, v.end);
}

GlyphAtlas build_atlas(const std::filesystem::path& base_dir, const AtlasManifest& manifest) {
  GlyphAtlas atlas;
  for (const auto& t : base_glyph_tokens()) {
    const auto path = base_dir / glyph_file_name(t);
    if (!std::filesystem::exists(path)) throw GlyphError("missing base glyph " + path.string());
    atlas.insert(t, load_glyph_file(path));
  }
  for (const auto& v : manifest.variants) {
    JamoToken token = [&] {
      try {
        return JamoToken::parse(v.token);
      } catch (const TokenError& e) {
        throw GlyphError("manifest requests " + v.token + ": " + e.what());
      }
    }();
    const auto base_name = token.base() == Jamo::SIL ? std::string("_")
                                                      : std::string(jamo_name(token.base()));
    atlas.insert(token.name(), synthesize_variant(atlas.at(base_name), token, v));
  }
  return atlas;
}

std::string atlas_index_json(const GlyphAtlas& atlas) {
  json glyphs = json::object();
  for (const auto& [token, glyph] : atlas.glyphs()) glyphs[token] = glyph_file_name(token);
  json doc = {{"format", "pbm"}, {"glyphs", glyphs}};
  return doc.dump(2) + "\n";
}

void write_atlas(const GlyphAtlas& atlas, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [token, glyph] : atlas.glyphs())
    save_pbm(out_dir / glyph_file_name(token), glyph, PbmFormat::ascii);
  std::ofstream out(out_dir / "atlas.json", std::ios::binary | std::ios::trunc);
  if (!out) throw GlyphError("cannot write " + (out_dir / "atlas.json").string());
  out << atlas_index_json(atlas);
}

GlyphAtlas load_atlas(const std::filesystem::path& dir) {
  json doc;
  try {
    doc = json::parse(read_file(dir / "atlas.json"));
  } catch (const json::parse_error& e) {
    throw GlyphError(std::string("atlas.json is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("glyphs") || !doc["glyphs"].is_object())
    throw GlyphError("atlas.json needs a 'glyphs' object");
  GlyphAtlas atlas;
  for (const auto& [token, file] : doc["glyphs"].items()) {
    if (!file.is_string()) throw GlyphError("atlas.json: file for " + token + " must be a string");
    atlas.insert(token, load_glyph_file(dir / file.get<std::string>()));
  }
  return atlas;
}

}  // namespace modjamo
