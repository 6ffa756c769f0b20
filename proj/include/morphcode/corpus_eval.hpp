#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morphcode/core_model.hpp"
#include "morphcode/rule_engine.hpp"

namespace morphcode {

// Which batch kernel runs. Parallel fans analysis out over OpenMP threads;
// Serial is the reference implementation. Both produce identical results
// (analysis is pure and output order follows input order), which the tests
// assert.
enum class Execution { Serial, Parallel };

// Top-ranked analysis per input surface, input order preserved; nullopt where
// no rule matched.
std::vector<std::optional<Analysis>> analyze_batch(const RuleTable& table,
                                                   const std::vector<std::string>& surfaces,
                                                   Execution execution = Execution::Parallel);

struct BatchSummary {
  std::size_t total{0};
  std::size_t analyzed{0};
  std::size_t rejected{0};
};

// The batch pipeline: reads one inflected form per line (# comments and blank
// lines skipped), writes output.tsv (surface<TAB>root), one <TENSE>_<PERSON>.txt
// per universal cell holding that cell's roots, and rejected.txt with the
// unanalyzable lines. Partition invariant: analyzed + rejected == total and
// the cell files' line counts sum to analyzed.
BatchSummary run_batch(const RuleTable& table, const std::filesystem::path& input_path,
                       const std::filesystem::path& outdir,
                       Execution execution = Execution::Parallel);

struct GoldEntry {
  std::string surface;
  std::string expected_root;
  Tense expected_tense{Tense::Prs};
  Person expected_person{Person::P1};
};

// UTF-8 TSV: surface<TAB>root<TAB>tense<TAB>person, `#` comments.
std::vector<GoldEntry> load_gold(std::string_view text);
std::vector<GoldEntry> load_gold_file(const std::filesystem::path& path);

struct EvalFailure {
  std::string surface;
  std::string expected;  // root/TENSE/person
  std::string got;       // root/TENSE/person or "-"
};

struct CellCount {
  std::size_t total{0};
  std::size_t correct_full{0};
};

struct EvalReport {
  std::size_t total{0};
  std::size_t correct_root{0};
  std::size_t correct_full{0};  // root + tense + person
  double accuracy_root{0.0};
  double accuracy_full{0.0};
  std::map<std::pair<Tense, Person>, CellCount> per_cell;
  std::vector<EvalFailure> failures;
};

// Compares the top-ranked analysis of every gold surface to its expectation.
EvalReport evaluate(const RuleTable& table, const std::vector<GoldEntry>& gold,
                    Execution execution = Execution::Parallel);

// Deterministic machine-readable rendering (TSV sections + summary lines).
std::string report_tsv(const EvalReport& report);

// Shared line reader: strips \r, drops blank and # lines.
std::vector<std::string> read_data_lines(const std::filesystem::path& path);

}  // namespace morphcode
