#include "morphcode/root_mapper.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "morphcode/core_model.hpp"
#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

bool entry_less(const LexiconEntry& e, std::pair<std::string_view, std::string_view> key) {
  if (e.language != key.first) return e.language < key.first;
  return e.native_root < key.second;
}

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

// Best candidate of one scan: (distance, native_root) with the smaller pair
// winning makes the tie-break deterministic and order-independent.
struct Best {
  std::size_t distance = std::numeric_limits<std::size_t>::max();
  const LexiconEntry* entry = nullptr;
  std::size_t runner_up = std::numeric_limits<std::size_t>::max();

  bool beats(std::size_t distance_b, const LexiconEntry* entry_b) const {
    if (distance != distance_b) return distance < distance_b;
    if (!entry) return false;
    if (!entry_b) return true;
    return entry->native_root < entry_b->native_root;
  }

  void offer(std::size_t d, const LexiconEntry* e) {
    if (beats(d, e)) {
      runner_up = std::min(runner_up, d);
    } else {
      runner_up = std::min(runner_up, distance);
      distance = d;
      entry = e;
    }
  }

  void merge(const Best& other) {
    if (other.entry) offer(other.distance, other.entry);
    runner_up = std::min(runner_up, other.runner_up);
  }
};

MappingResult finish(const Best& best, std::string_view native_root, std::size_t max_distance) {
  if (!best.entry || best.distance > max_distance)
    throw NoMapping("no lexicon entry within distance " + std::to_string(max_distance) +
                    " of '" + std::string(native_root) + "'");
  MappingResult result;
  result.universal_root_id = best.entry->universal_root_id;
  result.method = MapMethod::Fallback;
  result.distance = best.distance;
  if (best.runner_up != std::numeric_limits<std::size_t>::max())
    result.runner_up_distance = best.runner_up;
  return result;
}

}  // namespace

void RootLexicon::insert(LexiconEntry entry) {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(),
                                   std::make_pair(std::string_view(entry.language),
                                                  std::string_view(entry.native_root)),
                                   entry_less);
  if (it != entries_.end() && it->language == entry.language &&
      it->native_root == entry.native_root)
    throw DuplicateEntry(0, "duplicate lexicon entry (" + entry.language + ", " +
                                entry.native_root + ")");
  entries_.insert(it, std::move(entry));
}

std::span<const LexiconEntry> RootLexicon::language_span(std::string_view language) const {
  const auto lo = std::lower_bound(entries_.begin(), entries_.end(),
                                   std::make_pair(language, std::string_view("")), entry_less);
  if (lo == entries_.end() || lo->language != language) return {};
  auto hi = lo;
  while (hi != entries_.end() && hi->language == language) ++hi;
  return {&*lo, static_cast<std::size_t>(hi - lo)};
}

const LexiconEntry* RootLexicon::find_exact(std::string_view language,
                                            std::string_view native_root) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(),
                                   std::make_pair(language, native_root), entry_less);
  if (it == entries_.end() || it->language != language || it->native_root != native_root)
    return nullptr;
  return &*it;
}

RootLexicon load_lexicon(std::string_view text) {
  RootLexicon lexicon;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (start > text.size()) break;
      continue;
    }

    const auto fields = split_fields(line, '\t');
    if (fields.size() != 3)
      throw MalformedLine(line_no,
                          "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    LexiconEntry entry;
    entry.language = std::string(fields[0]);
    entry.native_root = uni::nfc_utf8(fields[1]);
    entry.universal_root_id = std::string(fields[2]);
    if (entry.language.empty()) throw MalformedLine(line_no, "empty language tag");
    if (entry.native_root.empty()) throw MalformedLine(line_no, "empty native root");
    if (!valid_root_id(entry.universal_root_id))
      throw MalformedLine(line_no, "universal root id '" + entry.universal_root_id +
                                       "' does not match [a-z][a-z0-9_]*");
    try {
      lexicon.insert(std::move(entry));
    } catch (const DuplicateEntry& e) {
      throw DuplicateEntry(line_no, e.what());
    }
    if (start > text.size()) break;
  }
  return lexicon;
}

std::size_t levenshtein(const uni::Codepoints& a, const uni::Codepoints& b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[0] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t del = prev[j + 1] + 1;
      const std::size_t ins = cur[j] + 1;
      const std::size_t sub = prev[j] + (a[i] == b[j] ? 0 : 1);
      cur[j + 1] = std::min({del, ins, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::size_t levenshtein(std::string_view a_utf8, std::string_view b_utf8) {
  return levenshtein(uni::nfc(uni::decode_utf8(a_utf8)), uni::nfc(uni::decode_utf8(b_utf8)));
}

MappingResult map_root_serial(const RootLexicon& lexicon, std::string_view language,
                              std::string_view native_root, std::size_t max_distance) {
  const auto root_nfc = uni::nfc_utf8(native_root);
  if (const auto* hit = lexicon.find_exact(language, root_nfc)) {
    MappingResult result;
    result.universal_root_id = hit->universal_root_id;
    result.method = MapMethod::Exact;
    result.distance = 0;
    return result;
  }
  const auto span = lexicon.language_span(language);
  const auto root_cps = uni::decode_utf8(root_nfc);
  Best best;
  for (const auto& entry : span) {
    best.offer(levenshtein(root_cps, uni::decode_utf8(entry.native_root)), &entry);
  }
  return finish(best, root_nfc, max_distance);
}

MappingResult map_root(const RootLexicon& lexicon, std::string_view language,
                       std::string_view native_root, std::size_t max_distance) {
  const auto root_nfc = uni::nfc_utf8(native_root);
  if (const auto* hit = lexicon.find_exact(language, root_nfc)) {
    MappingResult result;
    result.universal_root_id = hit->universal_root_id;
    result.method = MapMethod::Exact;
    result.distance = 0;
    return result;
  }
  const auto span = lexicon.language_span(language);
  const auto root_cps = uni::decode_utf8(root_nfc);

#ifdef _OPENMP
  // Parallel min-reduction: thread-local bests merged in thread order give
  // the same (distance, native_root) winner as the serial scan.
  if (span.size() >= 512) {
    const int threads = omp_get_max_threads();
    std::vector<Best> locals(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      Best& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(span.size()); ++i) {
        const auto& entry = span[static_cast<std::size_t>(i)];
        local.offer(levenshtein(root_cps, uni::decode_utf8(entry.native_root)), &entry);
      }
    }
    Best best;
    for (const auto& local : locals) best.merge(local);
    return finish(best, root_nfc, max_distance);
  }
#endif

  Best best;
  for (const auto& entry : span) {
    best.offer(levenshtein(root_cps, uni::decode_utf8(entry.native_root)), &entry);
  }
  return finish(best, root_nfc, max_distance);
}

}  // namespace morphcode
