#include "doctest.h"
#include "morphcode/errors.hpp"
#include "morphcode/match_index.hpp"
#include "test_util.hpp"

using namespace morphcode;

namespace {
const std::string kBengali = "S:asmad.C1.SG|O:-|V:gam.FUT.1";
}

TEST_CASE("index_add makes a sentence retrievable by full composite") {
  TempDir dir("index_add");
  MatchIndex index(dir.path());
  index.add({"d1", "bn", "আমি যাব", kBengali});

  const auto hits = index.query(kBengali);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].doc_id == "d1");
  CHECK(hits[0].score == 1.0);
  CHECK(hits[0].matched_on == MatchedOn::Full);

  CHECK_THROWS_AS(index.add({"d1", "en", "I will go", kBengali}), DuplicateDocId);
  CHECK_THROWS_AS(index.query("S:-|O:-"), MalformedCode);
}

TEST_CASE("verb-only hits score by slot overlap") {
  TempDir dir("verb_only");
  MatchIndex index(dir.path());
  index.add({"d1", "bn", "আমি যাব", kBengali});

  // subject differs, object (absent) and verb agree: 2 of 3 slots
  const auto hits = index.query("S:yusmad.C1.SG|O:-|V:gam.FUT.1");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].matched_on == MatchedOn::VerbOnly);
  CHECK(hits[0].score == doctest::Approx(2.0 / 3.0));

  // only the verb agrees: 1 of 3
  const auto one = index.query("S:yusmad.C1.SG|O:pustak.C2.SG|V:gam.FUT.1");
  REQUIRE(one.size() == 1);
  CHECK(one[0].score == doctest::Approx(1.0 / 3.0));

  // different verb: no shared slot basis, no hit
  CHECK(index.query("S:asmad.C1.SG|O:-|V:kr.FUT.1").empty());
  CHECK(index.query(kBengali)[0].score == 1.0);
}

TEST_CASE("query on an empty index returns nothing") {
  TempDir dir("empty");
  MatchIndex index(dir.path());
  CHECK(index.query(kBengali).empty());
}

TEST_CASE("hits order by score then doc id; language never matters") {
  TempDir dir("order");
  MatchIndex index(dir.path());
  index.add({"b", "bn", "x", kBengali});
  index.add({"a", "en", "y", kBengali});
  index.add({"c", "de", "z", "S:yusmad.C1.SG|O:-|V:gam.FUT.1"});

  const auto hits = index.query(kBengali);
  REQUIRE(hits.size() == 3);
  CHECK(hits[0].doc_id == "a");  // full hits first, doc id ascending
  CHECK(hits[1].doc_id == "b");
  CHECK(hits[0].score == 1.0);
  CHECK(hits[2].doc_id == "c");  // verb-only trails
  CHECK(hits[2].score == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("persistence: reopening the index reproduces query results") {
  TempDir dir("persist");
  {
    MatchIndex index(dir.path());
    index.add({"d1", "bn", "আমি যাব", kBengali});
    index.add({"d2", "en", "line with\ttab and\nnewline", "S:-|O:-|V:kr.PRS.3"});
  }
  MatchIndex reopened(dir.path());
  CHECK(reopened.size() == 2);
  const auto hits = reopened.query(kBengali);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].doc_id == "d1");
  CHECK(hits[0].score == 1.0);
  CHECK_THROWS_AS(reopened.add({"d2", "xx", "dup", kBengali}), DuplicateDocId);
}

TEST_CASE("journal escaping round-trips control characters") {
  const std::string nasty = "a\tb\nc\\d";
  CHECK(unescape_journal_field(escape_journal_field(nasty)) == nasty);
  CHECK(escape_journal_field(nasty).find('\t') == std::string::npos);
  CHECK(escape_journal_field(nasty).find('\n') == std::string::npos);
}
