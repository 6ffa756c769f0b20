#include "morphcode/unicode.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "morphcode/errors.hpp"

namespace morphcode::uni {

namespace {

struct Decomposition {
  char32_t source;
  char32_t first;
  char32_t second;
  bool composes;  // false for composition exclusions
};

// Canonical decompositions in the Devanagari and Bengali blocks (Unicode 13).
constexpr std::array<Decomposition, 16> kDecompositions{{
    {0x0929, 0x0928, 0x093C, true},
    {0x0931, 0x0930, 0x093C, true},
    {0x0934, 0x0933, 0x093C, true},
    {0x0958, 0x0915, 0x093C, false},
    {0x0959, 0x0916, 0x093C, false},
    {0x095A, 0x0917, 0x093C, false},
    {0x095B, 0x091C, 0x093C, false},
    {0x095C, 0x0921, 0x093C, false},
    {0x095D, 0x0922, 0x093C, false},
    {0x095E, 0x092B, 0x093C, false},
    {0x095F, 0x092F, 0x093C, false},
    {0x09CB, 0x09C7, 0x09BE, true},
    {0x09CC, 0x09C7, 0x09D7, true},
    {0x09DC, 0x09A1, 0x09BC, false},
    {0x09DD, 0x09A2, 0x09BC, false},
    {0x09DF, 0x09AF, 0x09BC, false},
}};

int combining_class(char32_t cp) {
  switch (cp) {
    case 0x093C:  // devanagari nukta
    case 0x09BC:  // bengali nukta
      return 7;
    case 0x094D:  // devanagari virama
    case 0x09CD:  // bengali virama
      return 9;
    case 0x09FE:  // bengali sandhi mark
      return 230;
    default:
      return 0;
  }
}

const Decomposition* find_decomposition(char32_t cp) {
  for (const auto& d : kDecompositions) {
    if (d.source == cp) return &d;
  }
  return nullptr;
}

char32_t compose_pair(char32_t a, char32_t b) {
  for (const auto& d : kDecompositions) {
    if (d.composes && d.first == a && d.second == b) return d.source;
  }
  return 0;
}

}  // namespace

Codepoints decode_utf8(std::string_view text) {
  Codepoints out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw MalformedUtf8("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > text.size()) throw MalformedUtf8("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) throw MalformedUtf8("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len]) throw MalformedUtf8("overlong UTF-8 encoding");
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw MalformedUtf8("codepoint out of range");
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(const Codepoints& cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

Codepoints nfc(const Codepoints& cps) {
  // decompose
  Codepoints buf;
  buf.reserve(cps.size() + 4);
  for (char32_t cp : cps) {
    if (const auto* d = find_decomposition(cp)) {
      buf.push_back(d->first);
      buf.push_back(d->second);
    } else {
      buf.push_back(cp);
    }
  }

  // canonical ordering: stable-sort runs of nonzero-ccc marks by ccc
  for (std::size_t i = 1; i < buf.size(); ++i) {
    const int ccc = combining_class(buf[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      const int prev = combining_class(buf[j - 1]);
      if (prev == 0 || prev <= ccc) break;
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // compose
  Codepoints out;
  out.reserve(buf.size());
  std::ptrdiff_t starter = -1;  // index into out of the last starter
  int last_ccc = -1;            // ccc of the last codepoint appended after it
  for (char32_t cp : buf) {
    const int ccc = combining_class(cp);
    if (starter >= 0) {
      // blocked when some codepoint between the starter and cp has ccc >= ccc(cp);
      // last_ccc is -1 while nothing has been appended since the starter
      const bool blocked = last_ccc >= ccc;
      if (!blocked) {
        if (char32_t composed = compose_pair(out[static_cast<std::size_t>(starter)], cp)) {
          out[static_cast<std::size_t>(starter)] = composed;
          continue;  // last_ccc unchanged: the composed char replaces the starter
        }
      }
    }
    if (ccc == 0) {
      starter = static_cast<std::ptrdiff_t>(out.size());
      last_ccc = -1;
    } else {
      last_ccc = ccc;
    }
    out.push_back(cp);
  }
  return out;
}

std::string nfc_utf8(std::string_view text) { return encode_utf8(nfc(decode_utf8(text))); }

bool ends_with(const Codepoints& text, const Codepoints& suffix) {
  if (suffix.size() > text.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), text.rbegin());
}

}  // namespace morphcode::uni
