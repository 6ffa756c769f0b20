#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "morphcode/corpus_eval.hpp"
#include "morphcode/errors.hpp"
#include "morphcode/root_mapper.hpp"

using namespace morphcode;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed
            << std::setprecision(3) << "serial " << std::setw(7) << serial_s << " s   parallel "
            << std::setw(7) << parallel_s << " s   speedup " << std::setprecision(2)
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x   outputs "
            << (identical ? "identical" : "DIFFER") << '\n';
}

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// every surface the table can generate, one per (root, cell)
std::vector<std::string> generated_workload(const RuleTable& table) {
  std::vector<std::string> out;
  std::set<std::tuple<Tense, Person, std::string, std::optional<Politeness>>> cells;
  for (const auto& rule : table.rules)
    cells.emplace(rule.tense, rule.person, rule.native_tense, rule.politeness);
  for (const auto& root_cps : table.declared_roots) {
    const auto root = uni::encode_utf8(root_cps);
    for (const auto& cell : cells) {
      Features f;
      f.tense = std::get<0>(cell);
      f.person = std::get<1>(cell);
      f.native_tense = std::get<2>(cell);
      f.politeness = std::get<3>(cell);
      out.push_back(generate(table, root, f));
    }
  }
  return out;
}

void bench_analyze(const RuleTable& table, std::size_t n) {
  const auto base = generated_workload(table);
  std::vector<std::string> surfaces;
  surfaces.reserve(n);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  for (std::size_t i = 0; i < n; ++i) surfaces.push_back(base[pick(rng)]);

  auto start = Clock::now();
  const auto serial = analyze_batch(table, surfaces, Execution::Serial);
  const double serial_s = seconds_since(start);

  start = Clock::now();
  const auto parallel = analyze_batch(table, surfaces, Execution::Parallel);
  const double parallel_s = seconds_since(start);

  report("analyze_batch", serial_s, parallel_s, serial == parallel);
}

void bench_map_root(std::size_t lexicon_size, std::size_t probes) {
  RootLexicon lexicon;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter('a', 'j');
  std::uniform_int_distribution<std::size_t> len(4, 10);
  std::size_t added = 0;
  while (added < lexicon_size) {
    std::string w;
    const auto k = len(rng);
    for (std::size_t i = 0; i < k; ++i) w.push_back(static_cast<char>(letter(rng)));
    try {
      lexicon.insert({"xx", w, "r" + std::to_string(added)});
      ++added;
    } catch (const DuplicateEntry&) {
    }
  }

  std::vector<std::string> queries;
  for (std::size_t i = 0; i < probes; ++i) {
    std::string w;
    const auto k = len(rng);
    for (std::size_t j = 0; j < k; ++j) w.push_back(static_cast<char>(letter(rng)));
    queries.push_back(w);
  }

  std::vector<std::string> serial_ids, parallel_ids;
  auto start = Clock::now();
  for (const auto& q : queries)
    serial_ids.push_back(map_root_serial(lexicon, "xx", q, 12).universal_root_id);
  const double serial_s = seconds_since(start);

  start = Clock::now();
  for (const auto& q : queries)
    parallel_ids.push_back(map_root(lexicon, "xx", q, 12).universal_root_id);
  const double parallel_s = seconds_since(start);

  report("map_root scan", serial_s, parallel_s, serial_ids == parallel_ids);
}

void bench_levenshtein(std::size_t words, std::size_t length) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> letter('a', 'f');
  std::vector<uni::Codepoints> pool;
  for (std::size_t i = 0; i < words; ++i) {
    uni::Codepoints w;
    for (std::size_t j = 0; j < length; ++j) w.push_back(static_cast<char32_t>(letter(rng)));
    pool.push_back(w);
  }

  std::uint64_t serial_sum = 0;
  auto start = Clock::now();
  for (const auto& a : pool)
    for (const auto& b : pool) serial_sum += levenshtein(a, b);
  const double serial_s = seconds_since(start);

  std::uint64_t parallel_sum = 0;
  start = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : parallel_sum)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pool.size()); ++i)
    for (const auto& b : pool) parallel_sum += levenshtein(pool[static_cast<std::size_t>(i)], b);
  const double parallel_s = seconds_since(start);

  report("levenshtein matrix", serial_s, parallel_s, serial_sum == parallel_sum);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  std::string rules_path, lang = "bn";
  std::size_t n = 200000, lexicon_size = 20000, probes = 40, lev_words = 600, lev_len = 24;
  app.add_option("--rules", rules_path, "rule file")->required();
  app.add_option("--lang", lang, "language tag");
  app.add_option("--n", n, "batch workload size");
  app.add_option("--lexicon-size", lexicon_size, "synthetic lexicon entries");
  app.add_option("--probes", probes, "nearest-root probes");
  app.add_option("--lev-words", lev_words, "levenshtein matrix side");
  app.add_option("--lev-len", lev_len, "levenshtein word length");
  CLI11_PARSE(app, argc, argv);

  try {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "built without OpenMP; parallel kernels run serially\n";
#endif
    const auto table = load_rules(read_file_or_throw(rules_path), lang);
    bench_analyze(table, n);
    bench_map_root(lexicon_size, probes);
    bench_levenshtein(lev_words, lev_len);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
