#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modjamo/profiles.hpp"

namespace modjamo {

/// One corpus row: `profile[:opt=val,...] TAB input TAB expected TAB mode`.
/// Exact rows compare the token serialization; property rows keep a
/// reference rendering in `expected` and only require a well-formed result.
struct CorpusRow {
  std::size_t line = 0;
  std::string profile;
  OptionMap options;
  std::string input;
  std::string expected;
  bool exact = true;
};

/// Blank lines and lines starting with '#' are skipped. Throws SyntaxError
/// (offset = line number) on a malformed row.
std::vector<CorpusRow> parse_corpus(std::string_view tsv);
std::vector<CorpusRow> load_corpus_file(const std::string& path);

struct CorpusOutcome {
  CorpusRow row;
  bool passed = false;
  std::string actual;  // token serialization, empty on error
  std::string error;
};

CorpusOutcome run_corpus_row(const CorpusRow& row);
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusRow>& rows);

/// One tab-separated line per row plus a summary line; byte-stable.
std::string format_corpus_report(const std::vector<CorpusOutcome>& outcomes);

}  // namespace modjamo
