#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphcode/core_model.hpp"
#include "morphcode/root_mapper.hpp"
#include "morphcode/rule_engine.hpp"

namespace morphcode {

enum class Pos { Noun, Pron, Verb, Other };
enum class WordOrder { Svo, Sov };

struct TaggedToken {
  std::string surface;  // NFC; multi-word surfaces carry embedded spaces
  Pos pos{Pos::Other};
  std::optional<int> case_hint;            // vibhakti 1..8, NOUN/PRON only
  std::optional<GramNumber> number_hint;   // NOUN/PRON only
};

struct ClauseSpec {
  std::vector<TaggedToken> tokens;
  WordOrder word_order{WordOrder::Svo};
};

// Parses one tagged-clause line: `word/POS[:C<case>,<NUM>]` tokens separated
// by spaces plus a mandatory `#order=SOV|SVO` trailer. Underscores inside a
// word stand for spaces so periphrastic verbs ("will_go") stay one token.
ClauseSpec parse_tagged_line(std::string_view line);

// Top-ranked analysis of the verb surface + root mapping -> VERB code.
UniversalCode encode_verb(const RuleTable& table, const RootLexicon& lexicon,
                          std::string_view surface,
                          std::size_t max_distance = kDefaultMaxDistance);

// Nominal slot: lexicon lookup of the token surface plus the shabdarup
// case/number pair; missing hints default to C1 (nominative) singular.
UniversalCode encode_nominal(const RootLexicon& lexicon, std::string_view language,
                             const TaggedToken& token,
                             std::size_t max_distance = kDefaultMaxDistance);

// Whole clause -> S,O,V composite. Slot assignment follows the declared word
// order; the rendering is always S,O,V so SOV and SVO sources of the same
// content produce identical strings.
CompositeCode encode_clause(const RuleTable& table, const RootLexicon& lexicon,
                            const ClauseSpec& clause,
                            std::size_t max_distance = kDefaultMaxDistance);

}  // namespace morphcode
