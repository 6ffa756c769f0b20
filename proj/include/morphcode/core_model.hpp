#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace morphcode {

// Universal tense/person inventory: the 3x3 verb matrix axes. Finer-grained
// native tenses (past habitual, present continuous, ...) live as string tags
// in Features::native_tense and map onto exactly one of these.
enum class Tense { Prs, Pst, Fut };
enum class Person { P1, P2, P3 };
enum class GramNumber { Sg, Du, Pl };
enum class Politeness { Intimate, Familiar, Honorific };

std::string_view to_token(Tense t);
std::string_view to_token(GramNumber n);
std::string_view to_token(Politeness p);
char person_digit(Person p);

// Parsers for the fixed token sets; return nullopt on unknown tokens.
std::optional<Tense> parse_tense(std::string_view tok);
std::optional<Person> parse_person(std::string_view tok);
std::optional<GramNumber> parse_number(std::string_view tok);
std::optional<Politeness> parse_politeness(std::string_view tok);

// Sanskrit vibhakti case, 1..7 plus vocative as 8.
inline constexpr int kMinCase = 1;
inline constexpr int kMaxCase = 8;
bool valid_case(int value);

// Feature bundle recovered by analysis. politeness and native_tense are
// carried for audit but never participate in universal-code equality.
struct Features {
  Tense tense{Tense::Prs};
  Person person{Person::P1};
  std::optional<GramNumber> number;
  std::string native_tense;
  std::optional<Politeness> politeness;

  bool operator==(const Features&) const = default;
};

// One reading of an inflected surface form. Invariant (enforced by the rule
// engine): apply_stem_transform(native_root, rule) + suffix == surface,
// bit-exact on NFC codepoints.
struct Analysis {
  std::string surface;      // NFC
  std::string native_root;  // NFC
  std::string suffix;       // possibly empty
  Features features;
  std::string rule_id;

  bool operator==(const Analysis&) const = default;
};

// true iff id matches [a-z][a-z0-9_]*
bool valid_root_id(std::string_view id);

// Language-independent code for one verb or nominal slot. Exactly the fields
// that take part in cross-lingual equality live here.
struct UniversalCode {
  enum class Kind { Verb, Nominal };

  Kind kind{Kind::Verb};
  std::string root_id;

  // verb part
  Tense tense{Tense::Prs};
  Person person{Person::P1};
  std::optional<GramNumber> number;

  // nominal part
  int case_value{kMinCase};
  GramNumber nominal_number{GramNumber::Sg};

  static UniversalCode verb(std::string root_id, Tense tense, Person person,
                            std::optional<GramNumber> number = std::nullopt);
  static UniversalCode nominal(std::string root_id, int case_value, GramNumber number);

  bool operator==(const UniversalCode& other) const;
};

// Ordered S,O,V bundle for one clause; the verb slot is mandatory.
struct CompositeCode {
  std::optional<UniversalCode> subject;
  std::optional<UniversalCode> object;
  UniversalCode verb;

  bool operator==(const CompositeCode&) const = default;
};

// Canonical rendering, bit-exact:
//   verbs    <root>.<TENSE>.<persondigit>[.<NUM>]
//   nominals <root>.C<case>.<NUM>
std::string render_code(const UniversalCode& code);

// Inverse of render_code; throws MalformedCode on anything else.
UniversalCode parse_code(std::string_view text);

// `S:<code>|O:<code>|V:<code>` with absent slots rendered as `-`. Slot order
// is always S,O,V regardless of the source language's word order.
std::string render_composite(const CompositeCode& composite);
CompositeCode parse_composite(std::string_view text);

}  // namespace morphcode
