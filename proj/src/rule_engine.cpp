#include "morphcode/rule_engine.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

constexpr char32_t kEmptySetSign = 0x2205;  // ∅ marks the empty suffix

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
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

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<RewritePair> parse_transform(std::string_view field, std::size_t line_no) {
  std::vector<RewritePair> out;
  if (field == "-") return out;
  for (const auto part : split_fields(field, ';')) {
    const auto gt = part.find('>');
    if (gt == std::string_view::npos)
      throw MalformedLine(line_no, "stem_transform pair without '>': '" + std::string(part) + "'");
    out.push_back({uni::nfc(uni::decode_utf8(part.substr(0, gt))),
                   uni::nfc(uni::decode_utf8(part.substr(gt + 1)))});
  }
  return out;
}

void sort_rules(std::vector<Rule>& rules) {
  std::stable_sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.suffix.size() != b.suffix.size()) return a.suffix.size() > b.suffix.size();
    return a.rule_id < b.rule_id;
  });
}

// Codepoint length of the first pattern matching the root's tail. nullopt
// when the rule is guarded and nothing matches; -1 flags the unguarded
// default (empty transform list) so any explicit guard outranks it.
std::optional<int> guard_match_length(const Rule& rule, const uni::Codepoints& root) {
  if (rule.transform.empty()) return -1;
  for (const auto& pair : rule.transform) {
    if (uni::ends_with(root, pair.pattern)) return static_cast<int>(pair.pattern.size());
  }
  return std::nullopt;
}

// Inverse of apply_stem_transform. Collects every pair whose replacement
// matches the stem tail and whose un-rewrite replays exactly, plus the
// identity reading for unguarded rules. With a declared root set the stem
// must un-rewrite onto a known root (the "is not a verb" gate);
// without one the first replayable candidate wins. nullopt means this rule
// cannot have produced the stem.
std::optional<uni::Codepoints> un_apply_stem_transform(const Rule& rule,
                                                       const uni::Codepoints& stem,
                                                       const std::set<uni::Codepoints>& declared) {
  std::vector<uni::Codepoints> candidates;
  for (const auto& pair : rule.transform) {
    if (!uni::ends_with(stem, pair.replacement)) continue;
    uni::Codepoints candidate = stem.substr(0, stem.size() - pair.replacement.size());
    candidate += pair.pattern;
    if (apply_stem_transform(rule, candidate) == stem) candidates.push_back(std::move(candidate));
  }
  if (rule.transform.empty()) candidates.push_back(stem);
  if (!declared.empty()) {
    for (const auto& candidate : candidates) {
      if (declared.count(candidate)) return candidate;
    }
    return std::nullopt;
  }
  if (candidates.empty()) return std::nullopt;
  return candidates.front();
}

Features features_of(const Rule& rule) {
  Features f;
  f.tense = rule.tense;
  f.person = rule.person;
  f.number = rule.number;
  f.native_tense = rule.native_tense;
  f.politeness = rule.politeness;
  return f;
}

bool bundle_matches(const Rule& rule, const Features& features) {
  return rule.tense == features.tense && rule.person == features.person &&
         rule.native_tense == features.native_tense && rule.politeness == features.politeness &&
         rule.number == features.number;
}

}  // namespace

uni::Codepoints apply_stem_transform(const Rule& rule, const uni::Codepoints& stem) {
  for (const auto& pair : rule.transform) {
    if (uni::ends_with(stem, pair.pattern)) {
      uni::Codepoints out = stem.substr(0, stem.size() - pair.pattern.size());
      out += pair.replacement;
      return out;
    }
  }
  return stem;
}

bool RuleTable::allows_dual() const {
  for (const auto& rule : rules) {
    if (rule.number == GramNumber::Du) return true;
  }
  return false;
}

RuleTable load_rules(std::string_view text, std::string language) {
  RuleTable table;
  table.language = std::move(language);

  // uniqueness key: (suffix, person, native_tense, politeness)
  std::map<std::tuple<uni::Codepoints, Person, std::string, std::optional<Politeness>>, std::size_t>
      seen;
  std::map<std::string, Tense> native_to_tense;

  std::vector<std::string> directive_roots;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = strip_cr(lines[i]);
    if (line.rfind("#!roots", 0) == 0) {
      // root-declaration directive: space-separated known roots
      std::size_t start = 7;
      while (start < line.size()) {
        auto end = line.find(' ', start);
        if (end == std::string_view::npos) end = line.size();
        if (end > start) directive_roots.emplace_back(line.substr(start, end - start));
        start = end + 1;
      }
      continue;
    }
    if (is_comment_or_blank(line)) continue;

    const auto fields = split_fields(line, '\t');
    if (fields.size() != 7)
      throw MalformedLine(line_no, "expected 7 tab-separated fields, got " +
                                       std::to_string(fields.size()));

    Rule rule;
    char id[24];
    std::snprintf(id, sizeof id, "L%03zu", line_no);
    rule.rule_id = id;

    const auto suffix_cps = uni::nfc(uni::decode_utf8(fields[0]));
    if (suffix_cps.size() == 1 && suffix_cps[0] == kEmptySetSign) {
      // ∅: the empty suffix
    } else if (suffix_cps.empty()) {
      throw MalformedLine(line_no, "empty suffix field; use ∅ for the empty suffix");
    } else {
      rule.suffix = suffix_cps;
    }

    const auto tense = parse_tense(fields[1]);
    if (!tense) throw UnknownTenseToken(line_no, "unknown tense token '" + std::string(fields[1]) + "'");
    rule.tense = *tense;

    const auto person = parse_person(fields[2]);
    if (!person) throw MalformedLine(line_no, "unknown person token '" + std::string(fields[2]) + "'");
    rule.person = *person;

    if (fields[3].empty() || fields[3] == "-")
      throw MalformedLine(line_no, "native_tense must be present");
    rule.native_tense = std::string(fields[3]);

    if (fields[4] != "-") {
      const auto politeness = parse_politeness(fields[4]);
      if (!politeness)
        throw MalformedLine(line_no, "unknown politeness token '" + std::string(fields[4]) + "'");
      rule.politeness = politeness;
    }

    if (fields[5] != "-") {
      const auto number = parse_number(fields[5]);
      if (!number)
        throw MalformedLine(line_no, "unknown number token '" + std::string(fields[5]) + "'");
      rule.number = number;
    }

    rule.transform = parse_transform(fields[6], line_no);

    const auto key = std::make_tuple(rule.suffix, rule.person, rule.native_tense, rule.politeness);
    if (const auto it = seen.find(key); it != seen.end())
      throw DuplicateRule(line_no, "duplicate (suffix, person, native_tense, politeness), first at line " +
                                       std::to_string(it->second));
    seen.emplace(key, line_no);

    if (const auto it = native_to_tense.find(rule.native_tense); it != native_to_tense.end()) {
      if (it->second != rule.tense)
        throw MalformedLine(line_no, "native_tense '" + rule.native_tense +
                                         "' maps to two universal tenses");
    } else {
      native_to_tense.emplace(rule.native_tense, rule.tense);
    }

    table.rules.push_back(std::move(rule));
  }

  sort_rules(table.rules);
  if (!directive_roots.empty()) declare_roots(table, directive_roots);
  return table;
}

void declare_roots(RuleTable& table, const std::vector<std::string>& roots) {
  table.declared_roots.clear();
  for (const auto& root : roots) table.declared_roots.insert(uni::nfc(uni::decode_utf8(root)));

  // Reversibility over the declared set: generating any covered feature
  // bundle from a known root and re-analyzing must recover (root, bundle).
  std::set<std::tuple<Tense, Person, std::string, std::optional<Politeness>,
                      std::optional<GramNumber>>>
      bundles;
  for (const auto& rule : table.rules)
    bundles.emplace(rule.tense, rule.person, rule.native_tense, rule.politeness, rule.number);

  for (const auto& root : table.declared_roots) {
    const std::string root_utf8 = uni::encode_utf8(root);
    for (const auto& bundle : bundles) {
      Features features;
      features.tense = std::get<0>(bundle);
      features.person = std::get<1>(bundle);
      features.native_tense = std::get<2>(bundle);
      features.politeness = std::get<3>(bundle);
      features.number = std::get<4>(bundle);
      const auto surface = generate(table, root_utf8, features);
      const auto analyses = analyze(table, surface, MatchMode::Lenient);
      const bool recovered =
          std::any_of(analyses.begin(), analyses.end(), [&](const Analysis& a) {
            return a.native_root == root_utf8 && a.features == features;
          });
      if (!recovered)
        throw Error("declared root '" + root_utf8 + "' does not round-trip through '" +
                    surface + "' (native tense " + features.native_tense + ")");
    }
  }
}

std::vector<Analysis> analyze(const RuleTable& table, std::string_view surface, MatchMode mode) {
  const auto cps = uni::nfc(uni::decode_utf8(surface));
  const std::string surface_nfc = uni::encode_utf8(cps);

  std::vector<Analysis> out;
  for (const auto& rule : table.rules) {  // already (len desc, rule_id asc)
    if (!uni::ends_with(cps, rule.suffix)) continue;
    const uni::Codepoints stem = cps.substr(0, cps.size() - rule.suffix.size());
    if (stem.empty()) continue;  // a reading needs a nonempty root
    const auto root = un_apply_stem_transform(rule, stem, table.declared_roots);
    if (!root) continue;
    Analysis a;
    a.surface = surface_nfc;
    a.native_root = uni::encode_utf8(*root);
    a.suffix = rule.suffix_utf8();
    a.features = features_of(rule);
    a.rule_id = rule.rule_id;
    out.push_back(std::move(a));
  }

  if (out.empty() && mode == MatchMode::Strict)
    throw NotAVerb("'" + surface_nfc + "' is not a verb (no rule matched)");
  return out;
}

std::string generate(const RuleTable& table, std::string_view root, const Features& features) {
  const auto root_cps = uni::nfc(uni::decode_utf8(root));

  const Rule* best = nullptr;
  int best_len = -2;
  for (const auto& rule : table.rules) {
    if (!bundle_matches(rule, features)) continue;
    const auto match = guard_match_length(rule, root_cps);
    if (!match) continue;
    // most specific guard wins; equal specificity falls back to rule_id order
    if (*match > best_len || (*match == best_len && rule.rule_id < best->rule_id)) {
      best = &rule;
      best_len = *match;
    }
  }
  if (!best)
    throw NoRuleForFeatures("no rule for root '" + uni::encode_utf8(root_cps) + "', tense " +
                            std::string(to_token(features.tense)) + ", person " +
                            person_digit(features.person) + std::string(", native '") +
                            features.native_tense + "'");
  return uni::encode_utf8(apply_stem_transform(*best, root_cps) + best->suffix);
}

std::optional<std::string> strip_suffix(std::string_view surface, std::string_view suffix) {
  const auto s = uni::decode_utf8(surface);
  const auto suf = uni::decode_utf8(suffix);
  if (!uni::ends_with(s, suf)) return std::nullopt;
  return uni::encode_utf8(s.substr(0, s.size() - suf.size()));
}

}  // namespace morphcode
