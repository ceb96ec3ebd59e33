#include "modjamo/corpus.hpp"

#include <fstream>
#include <sstream>

#include "modjamo/error.hpp"

namespace modjamo {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? s.npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

std::vector<CorpusRow> parse_corpus(std::string_view tsv) {
  std::vector<CorpusRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    auto nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    auto line = tsv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 4)
      throw SyntaxError("corpus row needs 4 tab-separated fields", line_no);
    CorpusRow row;
    row.line = line_no;
    const auto head = split(fields[0], ':');
    row.profile = head[0];
    if (head.size() > 2) throw SyntaxError("corpus profile field has more than one ':'", line_no);
    if (head.size() == 2) {
      for (const auto& kv : split(head[1], ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw SyntaxError("corpus option needs '='", line_no);
        row.options[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
    }
    row.input = fields[1];
    row.expected = fields[2];
    if (fields[3] == "exact") row.exact = true;
    else if (fields[3] == "property") row.exact = false;
    else throw SyntaxError("corpus mode must be exact or property", line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CorpusRow> load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

CorpusOutcome run_corpus_row(const CorpusRow& row) {
  CorpusOutcome out;
  out.row = row;
  try {
    const auto result = transliterate_with_profile(row.profile, row.input, row.options);
    out.actual = serialize_tokens(result.blocks);
    if (row.exact) {
      out.passed = out.actual == row.expected;
    } else {
      out.passed = !result.blocks.empty() && parse_tokens(out.actual) == result.blocks;
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusRow>& rows) {
  std::vector<CorpusOutcome> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(run_corpus_row(r));
  return out;
}

std::string format_corpus_report(const std::vector<CorpusOutcome>& outcomes) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed ? 1 : 0;
    out += o.passed ? "PASS" : "FAIL";
    out += "\t" + std::to_string(o.row.line) + "\t" + o.row.profile + "\t" +
           (o.row.exact ? "exact" : "property") + "\t" + o.row.input + "\t";
    out += o.error.empty() ? o.actual : "error: " + o.error;
    if (!o.passed && o.error.empty() && o.row.exact) out += "\texpected: " + o.row.expected;
    out += "\n";
  }
  out += "summary\t" + std::to_string(passed) + "/" + std::to_string(outcomes.size()) +
         " passed\n";
  return out;
}

}  // namespace modjamo
