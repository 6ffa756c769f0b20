#include "morphcode/corpus_eval.hpp"

#include <fstream>
#include <sstream>

#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::optional<Analysis> top_analysis(const RuleTable& table, const std::string& surface) {
  auto analyses = analyze(table, surface, MatchMode::Lenient);
  if (analyses.empty()) return std::nullopt;
  return std::move(analyses.front());
}

std::string cell_file_name(Tense tense, Person person) {
  std::string name(to_token(tense));
  name += '_';
  name += person_digit(person);
  name += ".txt";
  return name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

std::vector<std::optional<Analysis>> analyze_batch(const RuleTable& table,
                                                   const std::vector<std::string>& surfaces,
                                                   Execution execution) {
  std::vector<std::optional<Analysis>> out(surfaces.size());
  if (execution == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(surfaces.size()); ++i) {
      out[static_cast<std::size_t>(i)] =
          top_analysis(table, surfaces[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      out[i] = top_analysis(table, surfaces[i]);
    }
  }
  return out;
}

std::vector<std::string> read_data_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw IoError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

BatchSummary run_batch(const RuleTable& table, const std::filesystem::path& input_path,
                       const std::filesystem::path& outdir, Execution execution) {
  const auto lines = read_data_lines(input_path);

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create output directory " + outdir.string());

  const auto analyses = analyze_batch(table, lines, execution);

  // single-threaded writes, input order preserved per file
  std::string output_tsv;
  std::string rejected;
  std::map<std::string, std::string> cell_files;
  BatchSummary summary;
  summary.total = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& analysis = analyses[i];
    if (!analysis) {
      ++summary.rejected;
      rejected += uni::nfc_utf8(lines[i]);
      rejected += '\n';
      continue;
    }
    ++summary.analyzed;
    output_tsv += analysis->surface;
    output_tsv += '\t';
    output_tsv += analysis->native_root;
    output_tsv += '\n';
    auto& cell = cell_files[cell_file_name(analysis->features.tense, analysis->features.person)];
    cell += analysis->native_root;
    cell += '\n';
  }

  write_file(outdir / "output.tsv", output_tsv);
  write_file(outdir / "rejected.txt", rejected);
  for (const auto& [name, content] : cell_files) write_file(outdir / name, content);
  return summary;
}

std::vector<GoldEntry> load_gold(std::string_view text) {
  std::vector<GoldEntry> gold;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const bool last = end == text.size();
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      const auto fields = split_fields(line, '\t');
      if (fields.size() != 4)
        throw MalformedGoldLine(line_no, "expected 4 tab-separated fields, got " +
                                             std::to_string(fields.size()));
      GoldEntry entry;
      entry.surface = uni::nfc_utf8(fields[0]);
      entry.expected_root = uni::nfc_utf8(fields[1]);
      if (entry.surface.empty() || entry.expected_root.empty())
        throw MalformedGoldLine(line_no, "surface and root must be non-empty");
      const auto tense = parse_tense(fields[2]);
      if (!tense)
        throw MalformedGoldLine(line_no, "unknown tense token '" + std::string(fields[2]) + "'");
      entry.expected_tense = *tense;
      const auto person = parse_person(fields[3]);
      if (!person)
        throw MalformedGoldLine(line_no, "unknown person token '" + std::string(fields[3]) + "'");
      entry.expected_person = *person;
      gold.push_back(std::move(entry));
    }
    if (last) break;
  }
  return gold;
}

std::vector<GoldEntry> load_gold_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_gold(buffer.str());
}

EvalReport evaluate(const RuleTable& table, const std::vector<GoldEntry>& gold,
                    Execution execution) {
  std::vector<std::string> surfaces;
  surfaces.reserve(gold.size());
  for (const auto& entry : gold) surfaces.push_back(entry.surface);
  const auto analyses = analyze_batch(table, surfaces, execution);

  EvalReport report;
  report.total = gold.size();
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& entry = gold[i];
    const auto& analysis = analyses[i];
    auto& cell = report.per_cell[{entry.expected_tense, entry.expected_person}];
    ++cell.total;

    std::string got = "-";
    bool root_ok = false;
    bool full_ok = false;
    if (analysis) {
      root_ok = analysis->native_root == entry.expected_root;
      full_ok = root_ok && analysis->features.tense == entry.expected_tense &&
                analysis->features.person == entry.expected_person;
      got = analysis->native_root + "/" + std::string(to_token(analysis->features.tense)) + "/" +
            person_digit(analysis->features.person);
    }
    if (root_ok) ++report.correct_root;
    if (full_ok) {
      ++report.correct_full;
      ++cell.correct_full;
    } else {
      report.failures.push_back({entry.surface,
                                 entry.expected_root + "/" +
                                     std::string(to_token(entry.expected_tense)) + "/" +
                                     person_digit(entry.expected_person),
                                 got});
    }
  }
  if (report.total > 0) {
    report.accuracy_root =
        static_cast<double>(report.correct_root) / static_cast<double>(report.total);
    report.accuracy_full =
        static_cast<double>(report.correct_full) / static_cast<double>(report.total);
  }
  return report;
}

std::string report_tsv(const EvalReport& report) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "total\t" << report.total << '\n';
  out << "correct_root\t" << report.correct_root << '\n';
  out << "correct_full\t" << report.correct_full << '\n';
  out << "accuracy_root\t" << report.accuracy_root << '\n';
  out << "accuracy_full\t" << report.accuracy_full << '\n';
  for (const auto& [cell, count] : report.per_cell) {
    out << "cell\t" << to_token(cell.first) << '\t' << person_digit(cell.second) << '\t'
        << count.total << '\t' << count.correct_full << '\n';
  }
  for (const auto& failure : report.failures) {
    out << "failure\t" << failure.surface << '\t' << failure.expected << '\t' << failure.got
        << '\n';
  }
  return out.str();
}

}  // namespace morphcode
