#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphcode/unicode.hpp"

namespace morphcode {

struct LexiconEntry {
  std::string language;
  std::string native_root;  // NFC
  std::string universal_root_id;
};

// Native-root -> universal-root dictionary, stored sorted by
// (language, native_root) so exact hits are a binary search and per-language
// runs are contiguous for the fallback scan.
class RootLexicon {
 public:
  void insert(LexiconEntry entry);  // keeps order; throws DuplicateEntry on clash
  std::span<const LexiconEntry> entries() const { return entries_; }
  std::span<const LexiconEntry> language_span(std::string_view language) const;
  const LexiconEntry* find_exact(std::string_view language, std::string_view native_root) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LexiconEntry> entries_;
};

// UTF-8 TSV: language<TAB>native_root<TAB>universal_root_id, `#` comments.
RootLexicon load_lexicon(std::string_view text);

// Unit-cost edit distance over NFC codepoints.
std::size_t levenshtein(const uni::Codepoints& a, const uni::Codepoints& b);
std::size_t levenshtein(std::string_view a_utf8, std::string_view b_utf8);

enum class MapMethod { Exact, Fallback };

struct MappingResult {
  std::string universal_root_id;
  MapMethod method{MapMethod::Exact};
  std::size_t distance{0};
  std::optional<std::size_t> runner_up_distance;
};

inline constexpr std::size_t kDefaultMaxDistance = 2;

// Exact lookup, else nearest same-language entry by edit distance within
// max_distance (ties to the lexicographically smallest native_root).
// Throws NoMapping when nothing is in range. The fallback scan runs the
// OpenMP kernel on large lexica; map_root_serial is the reference
// implementation and both return bit-identical results.
MappingResult map_root(const RootLexicon& lexicon, std::string_view language,
                       std::string_view native_root, std::size_t max_distance = kDefaultMaxDistance);
MappingResult map_root_serial(const RootLexicon& lexicon, std::string_view language,
                              std::string_view native_root,
                              std::size_t max_distance = kDefaultMaxDistance);

}  // namespace morphcode
