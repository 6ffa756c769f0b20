#include <atomic>
#include <thread>
#include <vector>

#include "doctest.h"
#include "morphcode/match_index.hpp"
#include "morphcode/root_mapper.hpp"
#include "morphcode/rule_engine.hpp"
#include "test_util.hpp"

using namespace morphcode;

TEST_CASE("analyze is safe to share across threads") {
  const auto table = load_rules(read_file(data_path("bn.rules")), "bn");
  const std::vector<std::string> surfaces = {"যাব", "করলাম", "রেখেছি", "গাইছিলাম", "দেন", "শোনো"};
  const auto expected = [&] {
    std::vector<std::vector<Analysis>> all;
    for (const auto& s : surfaces) all.push_back(analyze(table, s));
    return all;
  }();

  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int iter = 0; iter < 300; ++iter) {
        for (std::size_t i = 0; i < surfaces.size(); ++i) {
          if (analyze(table, surfaces[i]) != expected[i]) ++mismatches;
        }
      }
    });
  }
  for (auto& thread : threads) thread.join();
  CHECK(mismatches == 0);
}

TEST_CASE("index queries run concurrently with a single writer") {
  TempDir dir("concurrent");
  MatchIndex index(dir.path());
  const std::string composite = "S:asmad.C1.SG|O:-|V:gam.FUT.1";
  index.add({"seed", "bn", "seed", composite});

  std::atomic<int> bad{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 3; ++t) {
    readers.emplace_back([&] {
      for (int iter = 0; iter < 400; ++iter) {
        const auto hits = index.query(composite);
        // the seed is always retrievable, always at full score
        if (hits.empty() || hits.front().score != 1.0) ++bad;
      }
    });
  }

  for (int i = 0; i < 100; ++i)
    index.add({"doc" + std::to_string(i), "bn", "text", composite});
  for (auto& reader : readers) reader.join();

  CHECK(bad == 0);
  CHECK(index.size() == 101);
  CHECK(index.query(composite).size() == 101);
}

TEST_CASE("map_root is safe to share across threads") {
  const auto lexicon = load_lexicon(read_file(data_path("lexicon.tsv")));
  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int iter = 0; iter < 500; ++iter) {
        if (map_root(lexicon, "bn", "যা", 2).universal_root_id != "gam") ++mismatches;
        if (map_root(lexicon, "bn", "যাা", 2).method != MapMethod::Fallback) ++mismatches;
      }
    });
  }
  for (auto& thread : threads) thread.join();
  CHECK(mismatches == 0);
}
