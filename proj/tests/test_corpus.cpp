#include <doctest.h>

#include "modjamo/corpus.hpp"
#include "modjamo/error.hpp"

using namespace modjamo;

TEST_CASE("corpus parsing") {
  auto rows = parse_corpus(
      "# header\n\nit\tcasa\tGG+A . J+A\texact\nes:spanish_variant=latam\tcero\tS+E . R+O\texact\n"
      "zh\tRìběn\t-\tproperty\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].line == 3);
  CHECK(rows[1].options.at("spanish_variant") == "latam");
  CHECK_FALSE(rows[2].exact);
  for (const char* bad : {"it\tcasa\n", "it\tcasa\tx\tmaybe\n", "it:novalue\tcasa\tx\texact\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_corpus(bad), SyntaxError);
  }
  try {
    parse_corpus("# c\nit\tcasa\n");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("corpus rows") {
  auto ok = run_corpus_row({1, "it", {}, "casa", "GG+A . J+A", true});
  CHECK(ok.passed);
  CHECK(ok.actual == "GG+A . J+A");
  auto wrong = run_corpus_row({1, "it", {}, "casa", "GG+A . SS+A", true});
  CHECK_FALSE(wrong.passed);
  auto prop = run_corpus_row({1, "zh", {}, "Rìběn", "anything", false});
  CHECK(prop.passed);
  auto broken = run_corpus_row({1, "it", {}, "x#y", "-", false});
  CHECK_FALSE(broken.passed);
  CHECK_FALSE(broken.error.empty());
  auto unknown = run_corpus_row({1, "xx", {}, "casa", "-", false});
  CHECK_FALSE(unknown.passed);
}

TEST_CASE("corpus report format") {
  auto rows = parse_corpus("it\tcasa\tGG+A . J+A\texact\nit\tcasa\tX\texact\n");
  auto report = format_corpus_report(run_corpus(rows));
  CHECK(report ==
        "PASS\t1\tit\texact\tcasa\tGG+A . J+A\n"
        "FAIL\t2\tit\texact\tcasa\tGG+A . J+A\texpected: X\n"
        "summary\t1/2 passed\n");
}
