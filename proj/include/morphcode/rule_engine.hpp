#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "morphcode/core_model.hpp"
#include "morphcode/unicode.hpp"

namespace morphcode {

// One rewrite applied at the stem boundary (the tail of the stem). An empty
// pattern matches every stem; the explicit `>` pair in a rule file is the
// catch-all identity that lets a guarded rule also act as the default.
struct RewritePair {
  uni::Codepoints pattern;
  uni::Codepoints replacement;
};

struct Rule {
  std::string rule_id;  // assigned from the source line, e.g. "L042"
  uni::Codepoints suffix;
  Tense tense{Tense::Prs};
  Person person{Person::P1};
  std::string native_tense;
  std::optional<Politeness> politeness;
  std::optional<GramNumber> number;
  std::vector<RewritePair> transform;

  std::string suffix_utf8() const { return uni::encode_utf8(suffix); }
};

// Per-language suffix table. Rules are kept sorted by descending suffix
// codepoint length, then ascending rule_id; analysis walks them in that order
// so the ranking contract falls out of the storage order.
struct RuleTable {
  std::string language;
  std::vector<Rule> rules;
  std::set<uni::Codepoints> declared_roots;

  bool allows_dual() const;
};

// Parses the 7-field tab-separated rule format. `#` starts a comment line,
// `-` marks an absent field, `∅` (U+2205) is the empty suffix, and the
// stem_transform field is `pat>rep` pairs joined by `;`.
// Throws MalformedLine / DuplicateRule / UnknownTenseToken with line numbers.
RuleTable load_rules(std::string_view text, std::string language);

// Declares the set of known roots (normally the lexicon's entries for this
// language). Analysis prefers declared roots when a stem un-rewrites
// ambiguously, and every rule is checked to round-trip on the declared set.
void declare_roots(RuleTable& table, const std::vector<std::string>& roots);

enum class MatchMode { Lenient, Strict };

// Suffix analysis: every matching rule contributes one reading,
// ranked longest suffix first, ties by rule_id; the empty-suffix citation
// rule, when present, naturally ranks last. Strict mode throws NotAVerb
// instead of returning an empty list.
std::vector<Analysis> analyze(const RuleTable& table, std::string_view surface,
                              MatchMode mode = MatchMode::Lenient);

// Inverse of analyze for one feature bundle: picks the bundle's rule whose
// transform guard matches the root (most specific pattern wins; an
// unguarded rule is the default) and replays transform + suffix.
// Throws NoRuleForFeatures when the bundle is absent or nothing applies.
std::string generate(const RuleTable& table, std::string_view root, const Features& features);

// Trailing-suffix removal at codepoint granularity; nullopt when suffix is
// not a trailing substring. The empty suffix returns the surface unchanged.
std::optional<std::string> strip_suffix(std::string_view surface, std::string_view suffix);

// Stem-transform application for one rule (first matching pattern rewrites
// the stem tail; identity otherwise). Exposed for the replay invariant:
// apply_stem_transform(analysis.native_root, rule) + suffix == surface.
uni::Codepoints apply_stem_transform(const Rule& rule, const uni::Codepoints& stem);

}  // namespace morphcode
