#include "morphcode/match_index.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "morphcode/core_model.hpp"
#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

std::string verb_code_of(const CompositeCode& composite) { return render_code(composite.verb); }

std::string slot_text(const std::optional<UniversalCode>& slot) {
  return slot ? render_code(*slot) : "-";
}

// Number of the three S,O,V slots whose renderings agree (an empty slot on
// both sides counts as agreement).
int matching_slots(const CompositeCode& a, const CompositeCode& b) {
  int n = 0;
  if (slot_text(a.subject) == slot_text(b.subject)) ++n;
  if (slot_text(a.object) == slot_text(b.object)) ++n;
  if (render_code(a.verb) == render_code(b.verb)) ++n;
  return n;
}

}  // namespace

std::string escape_journal_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_journal_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out += text[i];
      continue;
    }
    switch (text[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case '\\': out += '\\'; break;
      default: out += text[i];
    }
  }
  return out;
}

MatchIndex::MatchIndex(const std::filesystem::path& directory)
    : directory_(directory), journal_path_(directory / "journal.tsv") {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw IoError("cannot create index directory " + directory_.string());

  std::ifstream in(journal_path_, std::ios::binary);
  if (!in.is_open()) return;  // fresh index
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find('\t', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (fields.size() != 4)
      throw IoError("corrupt journal line " + std::to_string(line_no) + " in " +
                    journal_path_.string());
    IndexedSentence sentence;
    sentence.doc_id = unescape_journal_field(fields[0]);
    sentence.language = unescape_journal_field(fields[1]);
    sentence.composite = unescape_journal_field(fields[2]);
    sentence.original_text = unescape_journal_field(fields[3]);
    insert_in_memory(std::move(sentence));
  }
}

void MatchIndex::insert_in_memory(IndexedSentence sentence) {
  const auto composite = parse_composite(sentence.composite);  // validates
  sentence.composite = render_composite(composite);            // store canonical form
  if (by_doc_id_.count(sentence.doc_id))
    throw DuplicateDocId("doc_id '" + sentence.doc_id + "' already indexed");
  const std::size_t idx = sentences_.size();
  by_doc_id_.emplace(sentence.doc_id, idx);
  by_composite_[sentence.composite].push_back(idx);
  by_verb_[verb_code_of(composite)].push_back(idx);
  sentences_.push_back(std::move(sentence));
}

void MatchIndex::add(const IndexedSentence& sentence) {
  IndexedSentence canonical = sentence;
  canonical.composite = render_composite(parse_composite(sentence.composite));

  std::unique_lock lock(mutex_);
  insert_in_memory(canonical);

  std::ofstream out(journal_path_, std::ios::binary | std::ios::app);
  if (!out.is_open()) throw IoError("cannot append to " + journal_path_.string());
  out << escape_journal_field(canonical.doc_id) << '\t'
      << escape_journal_field(canonical.language) << '\t'
      << escape_journal_field(canonical.composite) << '\t'
      << escape_journal_field(canonical.original_text) << '\n';
  out.flush();
  if (!out) throw IoError("write to " + journal_path_.string() + " failed");
}

std::vector<MatchHit> MatchIndex::query(std::string_view composite_text) const {
  const auto composite = parse_composite(composite_text);
  const std::string canonical = render_composite(composite);

  std::shared_lock lock(mutex_);
  std::vector<MatchHit> hits;

  if (const auto it = by_composite_.find(canonical); it != by_composite_.end()) {
    for (const std::size_t idx : it->second) {
      const auto& s = sentences_[idx];
      hits.push_back({s.doc_id, s.language, 1.0, MatchedOn::Full});
    }
  }

  if (const auto it = by_verb_.find(verb_code_of(composite)); it != by_verb_.end()) {
    for (const std::size_t idx : it->second) {
      const auto& s = sentences_[idx];
      if (s.composite == canonical) continue;  // already a FULL hit
      const int n = matching_slots(composite, parse_composite(s.composite));
      hits.push_back({s.doc_id, s.language, static_cast<double>(n) / 3.0, MatchedOn::VerbOnly});
    }
  }

  std::sort(hits.begin(), hits.end(), [](const MatchHit& a, const MatchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc_id < b.doc_id;
  });
  return hits;
}

std::size_t MatchIndex::size() const {
  std::shared_lock lock(mutex_);
  return sentences_.size();
}

}  // namespace morphcode
