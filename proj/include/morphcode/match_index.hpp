#pragma once

#include <filesystem>
#include <fstream>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphcode {

struct IndexedSentence {
  std::string doc_id;         // unique within the index
  std::string language;
  std::string original_text;
  std::string composite;      // canonical composite rendering
};

enum class MatchedOn { Full, VerbOnly };

struct MatchHit {
  std::string doc_id;
  std::string language;
  double score{0.0};  // slot-overlap fraction; FULL hits are always 1.0
  MatchedOn matched_on{MatchedOn::Full};

  bool operator==(const MatchHit&) const = default;
};

// Inverted index from composite/verb codes to stored sentences. Persistence
// is an append-only UTF-8 TSV journal (journal.tsv inside the index
// directory); the in-memory maps are rebuilt on open. Single writer,
// concurrent readers.
class MatchIndex {
 public:
  // Opens (creating if needed) the index directory and replays the journal.
  explicit MatchIndex(const std::filesystem::path& directory);

  // Stores the sentence and appends it to the journal.
  // Throws DuplicateDocId / MalformedCode / IoError.
  void add(const IndexedSentence& sentence);

  // FULL matches (identical composite, score 1.0) first, then VERB_ONLY
  // matches (same verb code) scored by the fraction of the three slots that
  // agree; (score desc, doc_id asc) order. Throws MalformedCode.
  std::vector<MatchHit> query(std::string_view composite) const;

  std::size_t size() const;

 private:
  void insert_in_memory(IndexedSentence sentence);

  std::filesystem::path directory_;
  std::filesystem::path journal_path_;
  std::vector<IndexedSentence> sentences_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_composite_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_verb_;
  std::unordered_map<std::string, std::size_t> by_doc_id_;
  mutable std::shared_mutex mutex_;
};

// Journal field escaping: tab, newline and backslash as \t, \n, \\.
std::string escape_journal_field(std::string_view text);
std::string unescape_journal_field(std::string_view text);

}  // namespace morphcode
