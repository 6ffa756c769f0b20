#include "morphcode/encoder.hpp"

#include <algorithm>

#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

std::optional<Pos> parse_pos(std::string_view tok) {
  if (tok == "NOUN") return Pos::Noun;
  if (tok == "PRON") return Pos::Pron;
  if (tok == "VERB") return Pos::Verb;
  if (tok == "OTHER") return Pos::Other;
  return std::nullopt;
}

void parse_hints(std::string_view hints, TaggedToken& token) {
  std::size_t start = 0;
  while (start <= hints.size()) {
    auto end = hints.find(',', start);
    if (end == std::string_view::npos) end = hints.size();
    const auto part = hints.substr(start, end - start);
    start = end + 1;
    if (part.empty()) {
      if (start > hints.size()) break;
      throw MalformedClause("empty hint in '" + std::string(hints) + "'");
    }
    if (part.front() == 'C') {
      const auto digits = part.substr(1);
      if (digits.size() != 1 || digits[0] < '0' || digits[0] > '9' ||
          !valid_case(digits[0] - '0'))
        throw MalformedClause("bad case hint '" + std::string(part) + "'");
      token.case_hint = digits[0] - '0';
    } else if (const auto num = parse_number(part)) {
      token.number_hint = num;
    } else {
      throw MalformedClause("unknown hint '" + std::string(part) + "'");
    }
    if (start > hints.size()) break;
  }
}

}  // namespace

ClauseSpec parse_tagged_line(std::string_view line) {
  ClauseSpec clause;
  std::optional<WordOrder> order;

  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }

  for (const auto word : words) {
    if (word.rfind("#order=", 0) == 0) {
      const auto tag = word.substr(7);
      if (tag == "SOV")
        order = WordOrder::Sov;
      else if (tag == "SVO")
        order = WordOrder::Svo;
      else
        throw MalformedClause("unknown word order '" + std::string(tag) + "'");
      continue;
    }

    const auto slash = word.rfind('/');
    if (slash == std::string_view::npos || slash == 0)
      throw MalformedClause("token without /POS tag: '" + std::string(word) + "'");
    auto pos_part = word.substr(slash + 1);
    std::string_view hints;
    const auto colon_it = std::find(pos_part.begin(), pos_part.end(), ':');
    if (colon_it != pos_part.end()) {
      const auto colon = static_cast<std::size_t>(colon_it - pos_part.begin());
      hints = pos_part.substr(colon + 1);
      pos_part = pos_part.substr(0, colon);
    }
    const auto pos = parse_pos(pos_part);
    if (!pos) throw MalformedClause("unknown POS tag '" + std::string(pos_part) + "'");

    TaggedToken token;
    std::string surface(word.substr(0, slash));
    std::replace(surface.begin(), surface.end(), '_', ' ');
    token.surface = uni::nfc_utf8(surface);
    token.pos = *pos;
    if (!hints.empty()) {
      if (*pos != Pos::Noun && *pos != Pos::Pron)
        throw MalformedClause("case/number hints are only valid on NOUN/PRON tokens");
      parse_hints(hints, token);
    }
    clause.tokens.push_back(std::move(token));
  }

  if (!order) throw MalformedClause("missing #order=SOV|SVO trailer");
  if (clause.tokens.empty()) throw MalformedClause("clause has no tokens");
  clause.word_order = *order;
  return clause;
}

UniversalCode encode_verb(const RuleTable& table, const RootLexicon& lexicon,
                          std::string_view surface, std::size_t max_distance) {
  const auto analyses = analyze(table, surface, MatchMode::Lenient);
  if (analyses.empty())
    throw NotAVerb("'" + uni::nfc_utf8(surface) + "' is not a verb (no rule matched)");
  const Analysis& top = analyses.front();
  const auto mapping = map_root(lexicon, table.language, top.native_root, max_distance);
  return UniversalCode::verb(mapping.universal_root_id, top.features.tense, top.features.person,
                             top.features.number);
}

UniversalCode encode_nominal(const RootLexicon& lexicon, std::string_view language,
                             const TaggedToken& token, std::size_t max_distance) {
  const auto mapping = map_root(lexicon, language, token.surface, max_distance);
  const int case_value = token.case_hint.value_or(kMinCase);
  const GramNumber number = token.number_hint.value_or(GramNumber::Sg);
  return UniversalCode::nominal(mapping.universal_root_id, case_value, number);
}

CompositeCode encode_clause(const RuleTable& table, const RootLexicon& lexicon,
                            const ClauseSpec& clause, std::size_t max_distance) {
  const TaggedToken* verb = nullptr;
  std::vector<const TaggedToken*> pre_verbal;
  std::vector<const TaggedToken*> post_verbal;

  for (const auto& token : clause.tokens) {
    if (token.pos == Pos::Verb) {
      if (verb) throw MultipleVerbs("clause contains more than one VERB token");
      verb = &token;
      continue;
    }
    if (token.pos != Pos::Noun && token.pos != Pos::Pron) continue;
    (verb ? post_verbal : pre_verbal).push_back(&token);
  }
  if (!verb) throw NotAVerb("clause contains no VERB token");

  const TaggedToken* subject = nullptr;
  const TaggedToken* object = nullptr;
  if (clause.word_order == WordOrder::Svo) {
    if (pre_verbal.size() > 1 || post_verbal.size() > 1)
      throw MalformedClause("SVO clause allows one pre-verbal and one post-verbal nominal");
    if (!pre_verbal.empty()) subject = pre_verbal.front();
    if (!post_verbal.empty()) object = post_verbal.front();
  } else {
    if (!post_verbal.empty())
      throw MalformedClause("SOV clause has a nominal after the verb");
    if (pre_verbal.size() > 2)
      throw MalformedClause("SOV clause allows at most subject and object before the verb");
    if (!pre_verbal.empty()) subject = pre_verbal.front();
    if (pre_verbal.size() == 2) object = pre_verbal[1];
  }

  CompositeCode composite{std::nullopt, std::nullopt,
                          encode_verb(table, lexicon, verb->surface, max_distance)};
  if (subject)
    composite.subject = encode_nominal(lexicon, table.language, *subject, max_distance);
  if (object) composite.object = encode_nominal(lexicon, table.language, *object, max_distance);
  return composite;
}

}  // namespace morphcode
