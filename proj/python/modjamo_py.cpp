#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "modjamo/atlas.hpp"
#include "modjamo/corpus.hpp"
#include "modjamo/error.hpp"
#include "modjamo/glyph.hpp"
#include "modjamo/keyboard.hpp"
#include "modjamo/profiles.hpp"

namespace py = pybind11;
using namespace modjamo;

namespace {

std::vector<JamoSymbol> symbols_from(const std::vector<std::variant<int, std::string>>& items) {
  std::vector<JamoSymbol> out;
  for (const auto& item : items) {
    if (std::holds_alternative<int>(item)) out.emplace_back(ToneMark{std::get<int>(item)});
    else out.emplace_back(JamoToken::parse(std::get<std::string>(item)));
  }
  return out;
}

StrokeSegment target_stroke(const GlyphBitmap& g, const std::string& kind) {
  if (kind == "consonant") return find_target_consonant_stroke(g);
  if (kind == "vowel") return find_target_vowel_stroke(g);
  throw py::value_error("kind must be 'consonant' or 'vowel'");
}

py::dict stroke_dict(const StrokeSegment& s) {
  std::vector<std::pair<int, int>> path;
  for (auto p : s.path) path.emplace_back(p.x, p.y);
  py::dict d;
  d["path"] = path;
  d["direction"] = std::string(direction_name(s.direction));
  d["thickness"] = s.thickness;
  return d;
}

const KeyboardLayout& layout_or_default(const std::optional<std::string>& json) {
  static const KeyboardLayout shipped = load_layout(shipped_layout_source());
  if (!json) return shipped;
  thread_local KeyboardLayout custom;
  custom = load_layout(*json);
  return custom;
}

}  // namespace

PYBIND11_MODULE(modjamo, m) {
  m.doc() = "Extended-jamo transliteration, glyph synthesis and keyboard simulation";

  auto base_error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NoRuleMatched>(m, "NoRuleMatched", base_error.ptr());

  m.def("profiles", &shipped_profiles);

  m.def(
      "transliterate",
      [](const std::string& text, const std::string& profile, const OptionMap& options) {
        return serialize_tokens(transliterate_with_profile(profile, text, options).blocks);
      },
      py::arg("text"), py::arg("profile"), py::arg("options") = OptionMap{});

  m.def(
      "transliterate_trace",
      [](const std::string& text, const std::string& profile, const OptionMap& options) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const auto& s : transliterate_with_profile(profile, text, options).trace)
          out.emplace_back(s.offset, s.length, s.line);
        return out;
      },
      py::arg("text"), py::arg("profile"), py::arg("options") = OptionMap{});

  m.def(
      "display",
      [](const std::string& tokens, const std::string& policy) {
        return to_display_text(parse_tokens(tokens), policy_from_name(policy)).text;
      },
      py::arg("tokens"), py::arg("policy") = "marked");

  m.def("normalize_tokens", [](const std::string& tokens) { return serialize_tokens(parse_tokens(tokens)); });

  m.def("parse_tokens", [](const std::string& tokens) {
    std::vector<std::vector<py::dict>> out;
    for (const auto& word : parse_tokens(tokens)) {
      auto& w = out.emplace_back();
      for (const auto& b : word) {
        py::dict d;
        d["onset"] = b.onset().name();
        d["nucleus"] = b.nucleus().name();
        d["coda"] = b.coda() ? py::object(py::str(b.coda()->name())) : py::object(py::none());
        d["tone"] = b.tone();
        w.push_back(d);
      }
    }
    return out;
  });

  m.def("compose", [](const std::vector<std::variant<int, std::string>>& stream) {
    const auto symbols = symbols_from(stream);
    return serialize_tokens({compose(symbols)});
  });

  m.def("decompose", [](const std::string& word) {
    auto text = parse_tokens(word);
    if (text.size() != 1) throw py::value_error("expected a single word");
    std::vector<std::variant<int, std::string>> out;
    for (const auto& s : decompose(text[0])) {
      if (const auto* t = std::get_if<JamoToken>(&s)) out.emplace_back(t->name());
      else out.emplace_back(std::get<ToneMark>(s).tone);
    }
    return out;
  });

  py::class_<GlyphBitmap>(m, "Glyph")
      .def(py::init<int, int>())
      .def_static("from_pbm", [](const py::bytes& data) { return load_glyph(std::string(data)); })
      .def_static("load", [](const std::filesystem::path& p) { return load_glyph_file(p); })
      .def_property_readonly("width", &GlyphBitmap::width)
      .def_property_readonly("height", &GlyphBitmap::height)
      .def("get", py::overload_cast<int, int>(&GlyphBitmap::get, py::const_))
      .def("set", py::overload_cast<int, int, bool>(&GlyphBitmap::set), py::arg("x"), py::arg("y"),
           py::arg("ink") = true)
      .def("ink_count", &GlyphBitmap::ink_count)
      .def(
          "to_pbm",
          [](const GlyphBitmap& g, const std::string& format) {
            return py::bytes(to_pbm(g, format == "p1" ? PbmFormat::ascii : PbmFormat::binary));
          },
          py::arg("format") = "p4")
      .def("rows",
           [](const GlyphBitmap& g) {
             std::vector<std::string> rows;
             for (int y = 0; y < g.height(); ++y) {
               auto& r = rows.emplace_back();
               for (int x = 0; x < g.width(); ++x) r += g.get(x, y) ? '#' : '.';
             }
             return rows;
           })
      .def(py::self == py::self);

  m.def("components", [](const GlyphBitmap& g) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& c : connected_components(g)) {
      auto& v = out.emplace_back();
      for (auto p : c.pixels) v.emplace_back(p.x, p.y);
    }
    return out;
  });
  m.def("find_stroke", [](const GlyphBitmap& g, const std::string& kind) {
    return stroke_dict(target_stroke(g, kind));
  });
  m.def(
      "thicken",
      [](const GlyphBitmap& g, const std::string& kind, int radius) {
        return thicken_stroke(g, target_stroke(g, kind), radius);
      },
      py::arg("glyph"), py::arg("kind"), py::arg("radius") = 1);
  m.def(
      "taper",
      [](const GlyphBitmap& g, const std::string& kind, int start, int end) {
        return taper_stroke(g, target_stroke(g, kind), start, end);
      },
      py::arg("glyph"), py::arg("kind"), py::arg("start") = 1, py::arg("end") = 3);

  py::class_<GlyphAtlas>(m, "Atlas")
      .def("tokens",
           [](const GlyphAtlas& a) {
             std::vector<std::string> out;
             for (const auto& [k, v] : a.glyphs()) out.push_back(k);
             return out;
           })
      .def("glyph", [](const GlyphAtlas& a, const std::string& token) { return a.at(token); })
      .def("write", [](const GlyphAtlas& a, const std::filesystem::path& dir) { write_atlas(a, dir); })
      .def("index_json", &atlas_index_json);

  m.def(
      "build_atlas",
      [](const std::filesystem::path& base, const std::optional<std::filesystem::path>& manifest) {
        return build_atlas(base, manifest ? load_manifest_file(*manifest) : AtlasManifest{});
      },
      py::arg("base_dir"), py::arg("manifest") = py::none());
  m.def("load_atlas", &load_atlas);
  m.def(
      "render",
      [](const std::string& tokens, const GlyphAtlas& atlas, int cell) {
        return render_text(parse_tokens(tokens), atlas, cell);
      },
      py::arg("tokens"), py::arg("atlas"), py::arg("cell") = 32);

  m.def(
      "keys_for",
      [](const std::string& tokens, const std::optional<std::string>& layout) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& k : blocks_to_keystrokes(parse_tokens(tokens), layout_or_default(layout)))
          out.emplace_back(k.code, k.shift);
        return out;
      },
      py::arg("tokens"), py::arg("layout") = py::none());
  m.def(
      "type_keys",
      [](const std::vector<std::pair<std::string, bool>>& keys, const std::optional<std::string>& layout) {
        std::vector<KeyEvent> events;
        for (const auto& [code, shift] : keys) events.push_back({code, shift});
        return serialize_tokens(keystrokes_to_blocks(events, layout_or_default(layout)).blocks);
      },
      py::arg("keys"), py::arg("layout") = py::none());
  m.def(
      "replay_session",
      [](const std::string& jsonl, const std::optional<std::string>& layout) {
        std::vector<KeyEvent> events;
        for (const auto& e : parse_session_log(jsonl)) events.push_back(e.key);
        return serialize_tokens(keystrokes_to_blocks(events, layout_or_default(layout)).blocks);
      },
      py::arg("jsonl"), py::arg("layout") = py::none());
  m.def(
      "session_log",
      [](const std::string& tokens, int interval, const std::optional<std::string>& layout) {
        std::vector<SessionEvent> events;
        const auto keys = blocks_to_keystrokes(parse_tokens(tokens), layout_or_default(layout));
        for (std::size_t i = 0; i < keys.size(); ++i)
          events.push_back({static_cast<std::int64_t>(i) * interval, keys[i]});
        return write_session_log(events);
      },
      py::arg("tokens"), py::arg("interval") = 120, py::arg("layout") = py::none());

  m.def("run_corpus", [](const std::string& path) {
    return format_corpus_report(run_corpus(load_corpus_file(path)));
  });
}
