#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morphcode/corpus_eval.hpp"
#include "morphcode/encoder.hpp"
#include "morphcode/errors.hpp"
#include "morphcode/match_index.hpp"

using namespace morphcode;

namespace {

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads the rule table; a lexicon, when given, overrides the table's declared
// root set with that language's native roots.
RuleTable load_table(const std::string& rules_path, const std::string& lang,
                     const std::string& lexicon_path = "") {
  auto table = load_rules(read_file_or_throw(rules_path), lang);
  if (!lexicon_path.empty()) {
    const auto lexicon = load_lexicon(read_file_or_throw(lexicon_path));
    std::vector<std::string> roots;
    for (const auto& entry : lexicon.language_span(lang)) roots.push_back(entry.native_root);
    declare_roots(table, roots);
  }
  return table;
}

void print_analysis_line(const Analysis& a, bool audit) {
  std::cout << a.surface << '\t' << a.native_root << '\t' << to_token(a.features.tense) << '\t'
            << person_digit(a.features.person);
  if (audit) {
    std::cout << '\t' << a.features.native_tense << '\t'
              << (a.features.politeness ? to_token(*a.features.politeness) : "-") << '\t'
              << (a.suffix.empty() ? "∅" : a.suffix) << '\t' << a.rule_id;
  }
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"rule-driven morphological analyzer with universal root codes"};
  app.require_subcommand(1);

  std::string rules_path, lexicon_path, lang = "bn", gold_path, input_path, outdir, index_dir;
  std::size_t max_distance = kDefaultMaxDistance;
  bool strict = false, all = false, serial = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze inflected surface forms");
  std::vector<std::string> surfaces;
  analyze_cmd->add_option("--rules", rules_path, "rule file")->required();
  analyze_cmd->add_option("--lexicon", lexicon_path, "declare roots from this lexicon");
  analyze_cmd->add_option("--lang", lang, "language tag");
  analyze_cmd->add_flag("--strict", strict, "fail on the first non-verb");
  analyze_cmd->add_flag("--all", all, "emit every ranked analysis with audit columns");
  analyze_cmd->add_option("surface", surfaces, "surface forms")->required();

  auto* generate_cmd = app.add_subcommand("generate", "generate a surface form");
  std::string root, tense_tok, person_tok, native_tok, politeness_tok, number_tok;
  generate_cmd->add_option("--rules", rules_path, "rule file")->required();
  generate_cmd->add_option("--lang", lang, "language tag");
  generate_cmd->add_option("--root", root, "native root")->required();
  generate_cmd->add_option("--tense", tense_tok, "PRS|PST|FUT")->required();
  generate_cmd->add_option("--person", person_tok, "1|2|3")->required();
  generate_cmd->add_option("--native", native_tok, "native tense tag (default <TENSE>.SIMP)");
  generate_cmd->add_option("--politeness", politeness_tok, "INTIMATE|FAMILIAR|HONORIFIC");
  generate_cmd->add_option("--number", number_tok, "SG|DU|PL");

  auto* batch_cmd = app.add_subcommand("batch", "run the batch pipeline over a verb list");
  batch_cmd->add_option("--rules", rules_path, "rule file")->required();
  batch_cmd->add_option("--lexicon", lexicon_path, "declare roots from this lexicon");
  batch_cmd->add_option("--lang", lang, "language tag");
  batch_cmd->add_option("--input", input_path, "verb list, one per line")->required();
  batch_cmd->add_option("--outdir", outdir, "output directory")->required();
  batch_cmd->add_flag("--serial", serial, "use the serial reference kernel");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "score analysis against a gold corpus");
  evaluate_cmd->add_option("--rules", rules_path, "rule file")->required();
  evaluate_cmd->add_option("--lexicon", lexicon_path, "declare roots from this lexicon");
  evaluate_cmd->add_option("--lang", lang, "language tag");
  evaluate_cmd->add_option("--gold", gold_path, "gold TSV")->required();
  evaluate_cmd->add_flag("--serial", serial, "use the serial reference kernel");

  auto* encode_cmd = app.add_subcommand("encode", "encode a tagged clause as a composite code");
  std::string clause_line;
  encode_cmd->add_option("--rules", rules_path, "rule file")->required();
  encode_cmd->add_option("--lexicon", lexicon_path, "root lexicon TSV")->required();
  encode_cmd->add_option("--lang", lang, "language tag");
  encode_cmd->add_option("--max-distance", max_distance, "fallback edit-distance radius");
  encode_cmd->add_option("clause", clause_line, "tagged clause line")->required();

  auto* index_cmd = app.add_subcommand("index", "add a sentence to a match index");
  std::string doc_id, text, composite;
  index_cmd->add_option("--index", index_dir, "index directory")->required();
  index_cmd->add_option("--doc-id", doc_id, "unique document id")->required();
  index_cmd->add_option("--lang", lang, "language tag");
  index_cmd->add_option("--text", text, "original sentence text")->required();
  index_cmd->add_option("--composite", composite, "composite code")->required();

  auto* query_cmd = app.add_subcommand("query", "query a match index by composite code");
  query_cmd->add_option("--index", index_dir, "index directory")->required();
  query_cmd->add_option("--composite", composite, "composite code")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << '\n' << "run with --help for usage" << '\n';
    return 1;
  }

  const Execution execution = serial ? Execution::Serial : Execution::Parallel;

  if (analyze_cmd->parsed()) {
    const auto table = load_table(rules_path, lang, lexicon_path);
    for (const auto& surface : surfaces) {
      const auto analyses =
          analyze(table, surface, strict ? MatchMode::Strict : MatchMode::Lenient);
      if (analyses.empty()) {
        std::cout << uni::nfc_utf8(surface) << "\t-\t-\t-\n";
        continue;
      }
      if (all) {
        for (const auto& a : analyses) print_analysis_line(a, true);
      } else {
        print_analysis_line(analyses.front(), false);
      }
    }
    return 0;
  }

  if (generate_cmd->parsed()) {
    const auto table = load_table(rules_path, lang);
    Features features;
    const auto tense = parse_tense(tense_tok);
    if (!tense) throw Error("unknown tense token '" + tense_tok + "'");
    features.tense = *tense;
    const auto person = parse_person(person_tok);
    if (!person) throw Error("unknown person token '" + person_tok + "'");
    features.person = *person;
    features.native_tense =
        native_tok.empty() ? std::string(to_token(*tense)) + ".SIMP" : native_tok;
    if (!politeness_tok.empty()) {
      const auto politeness = parse_politeness(politeness_tok);
      if (!politeness) throw Error("unknown politeness token '" + politeness_tok + "'");
      features.politeness = politeness;
    }
    if (!number_tok.empty()) {
      const auto number = parse_number(number_tok);
      if (!number) throw Error("unknown number token '" + number_tok + "'");
      features.number = number;
    }
    std::cout << generate(table, root, features) << '\n';
    return 0;
  }

  if (batch_cmd->parsed()) {
    const auto table = load_table(rules_path, lang, lexicon_path);
    const auto summary = run_batch(table, input_path, outdir, execution);
    std::cout << "total\t" << summary.total << '\n'
              << "analyzed\t" << summary.analyzed << '\n'
              << "rejected\t" << summary.rejected << '\n';
    std::cerr << "analyzed " << summary.analyzed << " of " << summary.total << " lines ("
              << summary.rejected << " rejected) -> " << outdir << '\n';
    return 0;
  }

  if (evaluate_cmd->parsed()) {
    const auto table = load_table(rules_path, lang, lexicon_path);
    const auto gold = load_gold_file(gold_path);
    const auto report = evaluate(table, gold, execution);
    std::cout << report_tsv(report);
    std::cerr << "evaluated " << report.total << " forms: root accuracy "
              << 100.0 * report.accuracy_root << "%, full accuracy "
              << 100.0 * report.accuracy_full << "%, " << report.failures.size()
              << " failures" << '\n';
    return 0;
  }

  if (encode_cmd->parsed()) {
    const auto table = load_table(rules_path, lang);
    const auto lexicon = load_lexicon(read_file_or_throw(lexicon_path));
    const auto clause = parse_tagged_line(clause_line);
    std::cout << render_composite(encode_clause(table, lexicon, clause, max_distance)) << '\n';
    return 0;
  }

  if (index_cmd->parsed()) {
    MatchIndex index{std::filesystem::path(index_dir)};
    index.add({doc_id, lang, text, composite});
    std::cout << "indexed\t" << doc_id << '\n';
    return 0;
  }

  if (query_cmd->parsed()) {
    MatchIndex index{std::filesystem::path(index_dir)};
    std::cout << std::fixed << std::setprecision(6);
    for (const auto& hit : index.query(composite)) {
      std::cout << hit.doc_id << '\t' << hit.language << '\t' << hit.score << '\t'
                << (hit.matched_on == MatchedOn::Full ? "FULL" : "VERB_ONLY") << '\n';
    }
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
