#include <set>
#include <tuple>
#include <fstream>
#include <random>

#include "doctest.h"
#include "morphcode/corpus_eval.hpp"
#include "morphcode/errors.hpp"
#include "test_util.hpp"

using namespace morphcode;

namespace {

const RuleTable& bn() {
  static const RuleTable table = load_rules(read_file(data_path("bn.rules")), "bn");
  return table;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& line : lines) out << line << '\n';
}

std::size_t line_count(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("run_batch writes per-cell files and rejects non-verbs") {
  TempDir dir("batch");
  const auto input = dir.path() / "input.txt";
  write_lines(input, {"যাব", "করলাম"});
  const auto out = dir.path() / "out";
  const auto summary = run_batch(bn(), input, out);
  CHECK(summary.total == 2);
  CHECK(summary.analyzed == 2);
  CHECK(summary.rejected == 0);
  CHECK(read_file(out / "FUT_1.txt") == "যা\n");
  CHECK(read_file(out / "PST_1.txt") == "কর\n");
  CHECK(read_file(out / "rejected.txt").empty());
  CHECK(read_file(out / "output.tsv") == "যাব\tযা\nকরলাম\tকর\n");
}

TEST_CASE("run_batch sends unanalyzable lines to rejected.txt") {
  TempDir dir("batch_reject");
  const auto input = dir.path() / "input.txt";
  write_lines(input, {"টেবিল"});
  const auto out = dir.path() / "out";
  const auto summary = run_batch(bn(), input, out);
  CHECK(summary.total == 1);
  CHECK(summary.analyzed == 0);
  CHECK(summary.rejected == 1);
  CHECK(read_file(out / "rejected.txt") == "টেবিল\n");
  CHECK(!std::filesystem::exists(out / "FUT_1.txt"));
  CHECK(read_file(out / "output.tsv").empty());
}

TEST_CASE("run_batch on empty input") {
  TempDir dir("batch_empty");
  const auto input = dir.path() / "input.txt";
  write_lines(input, {});
  const auto summary = run_batch(bn(), input, dir.path() / "out");
  CHECK(summary.total == 0);
  CHECK(summary.analyzed == 0);
  CHECK(summary.rejected == 0);
}

TEST_CASE("batch partition property over randomized mixed input") {
  TempDir dir("partition");
  std::mt19937 rng(424242);

  // mix of real inflected forms and non-verbs
  const auto gold = load_gold_file(data_path("bn_gold.tsv"));
  const std::vector<std::string> noise = {"টেবিল", "বাংলা", "কলম", "hello", "আকাশ", "নদী"};
  std::vector<std::string> lines;
  std::uniform_int_distribution<std::size_t> pick_gold(0, gold.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_noise(0, noise.size() - 1);
  std::bernoulli_distribution is_verb(0.7);
  for (int i = 0; i < 1500; ++i)
    lines.push_back(is_verb(rng) ? gold[pick_gold(rng)].surface : noise[pick_noise(rng)]);

  const auto input = dir.path() / "input.txt";
  write_lines(input, lines);
  const auto out = dir.path() / "out";
  const auto summary = run_batch(bn(), input, out);

  CHECK(summary.total == lines.size());
  CHECK(summary.analyzed + summary.rejected == summary.total);

  std::size_t cell_lines = 0;
  for (const auto& entry : std::filesystem::directory_iterator(out)) {
    const auto name = entry.path().filename().string();
    if (name != "output.tsv" && name != "rejected.txt") cell_lines += line_count(entry.path());
  }
  CHECK(cell_lines == summary.analyzed);
  CHECK(line_count(out / "rejected.txt") == summary.rejected);
  CHECK(line_count(out / "output.tsv") == summary.analyzed);
}

TEST_CASE("serial and parallel batch analysis are identical") {
  const auto gold = load_gold_file(data_path("bn_gold.tsv"));
  std::vector<std::string> surfaces;
  for (const auto& entry : gold) surfaces.push_back(entry.surface);
  const auto serial = analyze_batch(bn(), surfaces, Execution::Serial);
  const auto parallel = analyze_batch(bn(), surfaces, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(serial[i] == parallel[i]);
}

TEST_CASE("evaluate over generated gold scores 100 percent") {
  // gold produced by generate() over a handful of roots and every cell
  std::vector<GoldEntry> gold;
  const std::string roots[] = {"কর", "যা", "রাখ", "দে", "বানা"};
  std::set<std::tuple<Tense, Person, std::string, std::optional<Politeness>>> cells;
  for (const auto& rule : bn().rules)
    cells.emplace(rule.tense, rule.person, rule.native_tense, rule.politeness);
  for (const auto& root : roots) {
    for (const auto& cell : cells) {
      Features f;
      f.tense = std::get<0>(cell);
      f.person = std::get<1>(cell);
      f.native_tense = std::get<2>(cell);
      f.politeness = std::get<3>(cell);
      gold.push_back({generate(bn(), root, f), root, f.tense, f.person});
    }
  }
  const auto report = evaluate(bn(), gold);
  CHECK(report.total == gold.size());
  CHECK(report.accuracy_full == 1.0);
  CHECK(report.accuracy_root == 1.0);
  CHECK(report.failures.empty());
}

TEST_CASE("evaluate arithmetic: one wrong expectation in 100") {
  std::vector<GoldEntry> gold;
  for (int i = 0; i < 99; ++i) gold.push_back({"করলাম", "কর", Tense::Pst, Person::P1});
  gold.push_back({"করলাম", "ভুল", Tense::Pst, Person::P1});
  const auto report = evaluate(bn(), gold);
  CHECK(report.total == 100);
  CHECK(report.correct_root == 99);
  CHECK(report.accuracy_root == doctest::Approx(0.99));
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].expected == "ভুল/PST/1");
  CHECK(report.failures[0].got == "কর/PST/1");
}

TEST_CASE("bundled gold corpus meets the accuracy bar") {
  const auto gold = load_gold_file(data_path("bn_gold.tsv"));
  REQUIRE(gold.size() >= 500);
  const auto report = evaluate(bn(), gold);
  CHECK(report.accuracy_root >= 0.98);
  CHECK(report.correct_full <= report.correct_root);
  CHECK(report.correct_root <= report.total);
  // per-cell totals partition the corpus
  std::size_t sum = 0;
  for (const auto& [cell, count] : report.per_cell) sum += count.total;
  CHECK(sum == report.total);
}

TEST_CASE("evaluate is deterministic and serial==parallel") {
  const auto gold = load_gold_file(data_path("bn_gold.tsv"));
  const auto a = report_tsv(evaluate(bn(), gold, Execution::Parallel));
  const auto b = report_tsv(evaluate(bn(), gold, Execution::Parallel));
  const auto c = report_tsv(evaluate(bn(), gold, Execution::Serial));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("load_gold validates lines") {
  CHECK_THROWS_AS(load_gold("করি\tকর\tPRS\n"), MalformedGoldLine);
  CHECK_THROWS_AS(load_gold("করি\tকর\tXX\t1\n"), MalformedGoldLine);
  CHECK_THROWS_AS(load_gold("করি\tকর\tPRS\t5\n"), MalformedGoldLine);
  const auto ok = load_gold("# comment\nকরি\tকর\tPRS\t1\n");
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].surface == "করি");
}
