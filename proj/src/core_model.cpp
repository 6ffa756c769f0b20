#include "morphcode/core_model.hpp"

#include <vector>

#include "morphcode/errors.hpp"

namespace morphcode {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string_view to_token(Tense t) {
  switch (t) {
    case Tense::Prs: return "PRS";
    case Tense::Pst: return "PST";
    case Tense::Fut: return "FUT";
  }
  return "";
}

std::string_view to_token(GramNumber n) {
  switch (n) {
    case GramNumber::Sg: return "SG";
    case GramNumber::Du: return "DU";
    case GramNumber::Pl: return "PL";
  }
  return "";
}

std::string_view to_token(Politeness p) {
  switch (p) {
    case Politeness::Intimate: return "INTIMATE";
    case Politeness::Familiar: return "FAMILIAR";
    case Politeness::Honorific: return "HONORIFIC";
  }
  return "";
}

char person_digit(Person p) {
  switch (p) {
    case Person::P1: return '1';
    case Person::P2: return '2';
    case Person::P3: return '3';
  }
  return '?';
}

std::optional<Tense> parse_tense(std::string_view tok) {
  if (tok == "PRS") return Tense::Prs;
  if (tok == "PST") return Tense::Pst;
  if (tok == "FUT") return Tense::Fut;
  return std::nullopt;
}

std::optional<Person> parse_person(std::string_view tok) {
  if (tok == "1") return Person::P1;
  if (tok == "2") return Person::P2;
  if (tok == "3") return Person::P3;
  return std::nullopt;
}

std::optional<GramNumber> parse_number(std::string_view tok) {
  if (tok == "SG") return GramNumber::Sg;
  if (tok == "DU") return GramNumber::Du;
  if (tok == "PL") return GramNumber::Pl;
  return std::nullopt;
}

std::optional<Politeness> parse_politeness(std::string_view tok) {
  if (tok == "INTIMATE") return Politeness::Intimate;
  if (tok == "FAMILIAR") return Politeness::Familiar;
  if (tok == "HONORIFIC") return Politeness::Honorific;
  return std::nullopt;
}

bool valid_case(int value) { return value >= kMinCase && value <= kMaxCase; }

bool valid_root_id(std::string_view id) {
  if (id.empty()) return false;
  if (id.front() < 'a' || id.front() > 'z') return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

UniversalCode UniversalCode::verb(std::string root_id, Tense tense, Person person,
                                  std::optional<GramNumber> number) {
  UniversalCode code;
  code.kind = Kind::Verb;
  code.root_id = std::move(root_id);
  code.tense = tense;
  code.person = person;
  code.number = number;
  return code;
}

UniversalCode UniversalCode::nominal(std::string root_id, int case_value, GramNumber number) {
  UniversalCode code;
  code.kind = Kind::Nominal;
  code.root_id = std::move(root_id);
  code.case_value = case_value;
  code.nominal_number = number;
  return code;
}

bool UniversalCode::operator==(const UniversalCode& other) const {
  if (kind != other.kind || root_id != other.root_id) return false;
  if (kind == Kind::Verb)
    return tense == other.tense && person == other.person && number == other.number;
  return case_value == other.case_value && nominal_number == other.nominal_number;
}

std::string render_code(const UniversalCode& code) {
  std::string out = code.root_id;
  if (code.kind == UniversalCode::Kind::Verb) {
    out += '.';
    out += to_token(code.tense);
    out += '.';
    out += person_digit(code.person);
    if (code.number) {
      out += '.';
      out += to_token(*code.number);
    }
  } else {
    out += ".C";
    out += std::to_string(code.case_value);
    out += '.';
    out += to_token(code.nominal_number);
  }
  return out;
}

UniversalCode parse_code(std::string_view text) {
  const auto parts = split(text, '.');
  if (parts.size() < 3 || parts.size() > 4)
    throw MalformedCode("expected 3 or 4 dot-separated fields in '" + std::string(text) + "'");
  if (!valid_root_id(parts[0]))
    throw MalformedCode("bad root id '" + std::string(parts[0]) + "'");

  const auto field1 = parts[1];
  if (!field1.empty() && field1.front() == 'C') {
    // nominal: <root>.C<case>.<NUM>
    if (parts.size() != 3) throw MalformedCode("nominal code takes exactly 3 fields");
    const auto digits = field1.substr(1);
    if (digits.size() != 1 || digits[0] < '0' || digits[0] > '9')
      throw MalformedCode("bad case field '" + std::string(field1) + "'");
    const int case_value = digits[0] - '0';
    if (!valid_case(case_value))
      throw MalformedCode("case out of range in '" + std::string(text) + "'");
    const auto num = parse_number(parts[2]);
    if (!num) throw MalformedCode("unknown number token '" + std::string(parts[2]) + "'");
    return UniversalCode::nominal(std::string(parts[0]), case_value, *num);
  }

  const auto tense = parse_tense(field1);
  if (!tense) throw MalformedCode("unknown tense token '" + std::string(field1) + "'");
  const auto person = parse_person(parts[2]);
  if (!person) throw MalformedCode("unknown person token '" + std::string(parts[2]) + "'");
  std::optional<GramNumber> number;
  if (parts.size() == 4) {
    number = parse_number(parts[3]);
    if (!number) throw MalformedCode("unknown number token '" + std::string(parts[3]) + "'");
  }
  return UniversalCode::verb(std::string(parts[0]), *tense, *person, number);
}

std::string render_composite(const CompositeCode& composite) {
  if (composite.verb.kind != UniversalCode::Kind::Verb)
    throw MalformedCode("composite verb slot must hold a verb code");
  std::string out = "S:";
  out += composite.subject ? render_code(*composite.subject) : "-";
  out += "|O:";
  out += composite.object ? render_code(*composite.object) : "-";
  out += "|V:";
  out += render_code(composite.verb);
  return out;
}

CompositeCode parse_composite(std::string_view text) {
  const auto slots = split(text, '|');
  if (slots.size() != 3) throw MalformedCode("expected 3 |-separated slots");
  const std::string_view prefixes[3] = {"S:", "O:", "V:"};
  std::optional<UniversalCode> codes[3];
  for (int i = 0; i < 3; ++i) {
    const auto slot = slots[static_cast<std::size_t>(i)];
    if (slot.substr(0, 2) != prefixes[i])
      throw MalformedCode("slot " + std::to_string(i) + " must start with '" +
                          std::string(prefixes[i]) + "'");
    const auto body = slot.substr(2);
    if (body == "-") continue;
    codes[i] = parse_code(body);
  }
  if (!codes[2]) throw MalformedCode("verb slot is mandatory");
  if (codes[2]->kind != UniversalCode::Kind::Verb)
    throw MalformedCode("verb slot must hold a verb code");
  CompositeCode composite{codes[0], codes[1], *codes[2]};
  return composite;
}

}  // namespace morphcode
