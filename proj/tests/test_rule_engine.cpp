#include <tuple>
#include <set>

#include "doctest.h"
#include "morphcode/errors.hpp"
#include "morphcode/rule_engine.hpp"
#include "test_util.hpp"

using namespace morphcode;

namespace {

const RuleTable& bn_table() {
  static const RuleTable table = load_rules(read_file(data_path("bn.rules")), "bn");
  return table;
}

}  // namespace

TEST_CASE("load_rules sorts by suffix length then rule id") {
  const std::string text =
      "ব\tFUT\t1\tFUT.SIMP\t-\t-\t-\n"
      "লাম\tPST\t1\tPST.SIMP\t-\t-\t-\n"
      "ি\tPRS\t1\tPRS.SIMP\t-\t-\t-\n";
  const auto table = load_rules(text, "bn");
  REQUIRE(table.rules.size() == 3);
  CHECK(table.rules[0].suffix_utf8() == "লাম");  // 3 codepoints first
  CHECK(table.rules[1].suffix_utf8() == "ব");    // length ties by line order
  CHECK(table.rules[2].suffix_utf8() == "ি");
}

TEST_CASE("load_rules rejects duplicates and unknown tokens with line numbers") {
  const std::string dup =
      "ব\tFUT\t1\tFUT.SIMP\t-\t-\t-\n"
      "ব\tFUT\t1\tFUT.SIMP\t-\t-\tক>ক\n";
  CHECK_THROWS_AS(load_rules(dup, "bn"), DuplicateRule);
  try {
    load_rules(dup, "bn");
  } catch (const DuplicateRule& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(load_rules("ব\tFU\t1\tFUT.SIMP\t-\t-\t-\n", "bn"), UnknownTenseToken);
  CHECK_THROWS_AS(load_rules("ব\tFUT\t1\tFUT.SIMP\t-\t-\n", "bn"), MalformedLine);
  CHECK_THROWS_AS(load_rules("ব\tFUT\t9\tFUT.SIMP\t-\t-\t-\n", "bn"), MalformedLine);
}

TEST_CASE("load_rules accepts CRLF line endings") {
  const auto table = load_rules("\u09AC\tFUT\t1\tFUT.SIMP\t-\t-\t-\r\n", "bn");
  REQUIRE(table.rules.size() == 1);
  CHECK(table.rules[0].suffix_utf8() == "\u09AC");
}

TEST_CASE("empty rule file loads an empty table") {
  const auto table = load_rules("# nothing here\n", "bn");
  CHECK(table.rules.empty());
  CHECK(analyze(table, "যাব").empty());
  CHECK_THROWS_AS(analyze(table, "যাব", MatchMode::Strict), NotAVerb);
}

TEST_CASE("analyze recovers root and features for reference forms") {
  const auto& table = bn_table();

  auto top = [&](const std::string& surface) {
    const auto analyses = analyze(table, surface);
    REQUIRE(!analyses.empty());
    return analyses.front();
  };

  const auto jabo = top("যাব");
  CHECK(jabo.native_root == "যা");
  CHECK(jabo.suffix == "ব");
  CHECK(jabo.features.tense == Tense::Fut);
  CHECK(jabo.features.person == Person::P1);

  const auto korlam = top("করলাম");
  CHECK(korlam.native_root == "কর");
  CHECK(korlam.suffix == "লাম");
  CHECK(korlam.features.tense == Tense::Pst);
  CHECK(korlam.features.person == Person::P1);

  // suppletive past of যা
  const auto gelam = top("গেলাম");
  CHECK(gelam.native_root == "যা");
  CHECK(gelam.features.tense == Tense::Pst);

  // vowel-harmony perfect of রাখ
  const auto rekhechhi = top("রেখেছি");
  CHECK(rekhechhi.native_root == "রাখ");
  CHECK(rekhechhi.features.tense == Tense::Prs);
  CHECK(rekhechhi.features.native_tense == "PRS.PERF");
}

TEST_CASE("analyze rejects non-verbs; strict mode throws") {
  const auto& table = bn_table();
  CHECK(analyze(table, "টেবিল").empty());
  CHECK_THROWS_AS(analyze(table, "টেবিল", MatchMode::Strict), NotAVerb);
}

TEST_CASE("empty-suffix citation rule analyzes the bare stem") {
  // a custom mini-table with the empty-suffix present-P2 rule
  const std::string text =
      "ি\tPRS\t1\tPRS.SIMP\t-\t-\t-\n"
      "∅\tPRS\t2\tPRS.CIT\t-\t-\t-\n";
  const auto table = load_rules(text, "bn");
  const auto analyses = analyze(table, "কর");
  REQUIRE(analyses.size() == 1);
  CHECK(analyses[0].native_root == "কর");
  CHECK(analyses[0].suffix == "");
  CHECK(analyses[0].features.tense == Tense::Prs);
  CHECK(analyses[0].features.person == Person::P2);

  // the empty-suffix rule ranks last when other rules also match
  const auto kori = analyze(table, "করি");
  REQUIRE(kori.size() == 2);
  CHECK(kori[0].suffix == "ি");
  CHECK(kori[1].suffix == "");
}

TEST_CASE("generate produces reference forms and honours guards") {
  const auto& table = bn_table();
  Features f;
  f.native_tense = "FUT.SIMP";
  f.tense = Tense::Fut;
  f.person = Person::P1;
  CHECK(generate(table, "কর", f) == "করব");
  CHECK(generate(table, "যা", f) == "যাব");
  CHECK(generate(table, "গা", f) == "গাইব");  // guarded ই-insertion rule wins

  f.native_tense = "PST.SIMP";
  f.tense = Tense::Pst;
  CHECK(generate(table, "যা", f) == "গেলাম");
  CHECK(generate(table, "আস", f) == "এলাম");
  CHECK(generate(table, "বানা", f) == "বানালাম");

  f.native_tense = "PRS.PERF";
  f.tense = Tense::Prs;
  CHECK(generate(table, "রাখ", f) == "রেখেছি");
  CHECK(generate(table, "হ", f) == "হয়েছি");

  f.native_tense = "XX";
  CHECK_THROWS_AS(generate(table, "কর", f), NoRuleForFeatures);
}

TEST_CASE("strip_suffix works at codepoint granularity") {
  CHECK(strip_suffix("করলাম", "লাম") == std::optional<std::string>("কর"));
  CHECK(strip_suffix("করলাম", "") == std::optional<std::string>("করলাম"));
  CHECK(strip_suffix("করলাম", "ব") == std::nullopt);
}

TEST_CASE("round trip over every declared root and every covered cell") {
  const auto& table = bn_table();
  REQUIRE(!table.declared_roots.empty());

  std::set<std::tuple<Tense, Person, std::string, std::optional<Politeness>>> cells;
  for (const auto& rule : table.rules)
    cells.emplace(rule.tense, rule.person, rule.native_tense, rule.politeness);

  std::size_t checked = 0;
  for (const auto& root_cps : table.declared_roots) {
    const auto root = uni::encode_utf8(root_cps);
    for (const auto& cell : cells) {
      Features f;
      f.tense = std::get<0>(cell);
      f.person = std::get<1>(cell);
      f.native_tense = std::get<2>(cell);
      f.politeness = std::get<3>(cell);
      const auto surface = generate(table, root, f);
      const auto analyses = analyze(table, surface);
      REQUIRE(!analyses.empty());
      const auto& top = analyses.front();
      CHECK(top.native_root == root);
      CHECK(top.features == f);
      ++checked;
    }
  }
  CHECK(checked == table.declared_roots.size() * cells.size());
}

TEST_CASE("replay invariant: transform(root) + suffix == surface, bit exact") {
  const auto& table = bn_table();
  const std::string surfaces[] = {"যাব", "করলাম", "গেলাম",   "রেখেছি", "খেয়েছিলাম",
                                  "দিস", "হয়েছি", "গাইছিলাম", "শোনো",   "এলেন"};
  for (const auto& surface : surfaces) {
    for (const auto& analysis : analyze(table, surface)) {
      const Rule* rule = nullptr;
      for (const auto& r : table.rules)
        if (r.rule_id == analysis.rule_id) rule = &r;
      REQUIRE(rule != nullptr);
      const auto replayed =
          apply_stem_transform(*rule, uni::decode_utf8(analysis.native_root)) + rule->suffix;
      CHECK(uni::encode_utf8(replayed) == analysis.surface);
      CHECK(analysis.surface == uni::nfc_utf8(surface));
    }
  }
}

TEST_CASE("analyze is NFC-idempotent and deterministic") {
  const auto& table = bn_table();
  // same text with the ো vowel sign decomposed as ে + া
  const std::string composed = "শোনো";
  const std::string decomposed = "শোনো";
  CHECK(analyze(table, composed) == analyze(table, decomposed));
  CHECK(analyze(table, "করলাম") == analyze(table, "করলাম"));
}

TEST_CASE("longest suffix ranks first, ties by rule id") {
  // overlapping mini-table: মাতি reads as মা+তি, মাত+ি (twice)
  const std::string text =
      "#!roots মা মাত\n"
      "ি\tPRS\t1\tPRS.A\t-\t-\t-\n"
      "তি\tPRS\t2\tPRS.B\t-\t-\t-\n"
      "ি\tPRS\t3\tPRS.C\t-\t-\t-\n";
  const auto table = load_rules(text, "bn");
  const auto analyses = analyze(table, "মাতি");
  REQUIRE(analyses.size() == 3);
  CHECK(analyses[0].native_root == "মা");    // longest suffix wins
  CHECK(analyses[0].suffix == "তি");
  CHECK(analyses[1].native_root == "মাত");   // length tie broken by rule id
  CHECK(analyses[1].rule_id < analyses[2].rule_id);
  CHECK(analyses[2].native_root == "মাত");

  // bundled table: the perfect-past reading outranks shorter-suffix readings
  const auto korechilam = analyze(bn_table(), "করেছিলাম");
  REQUIRE(!korechilam.empty());
  CHECK(korechilam.front().native_root == "কর");
  CHECK(korechilam.front().features.native_tense == "PST.PERF");
}
