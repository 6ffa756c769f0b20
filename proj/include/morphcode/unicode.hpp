#pragma once

#include <string>
#include <string_view>

namespace morphcode::uni {

// Codepoint string; all suffix/affix arithmetic in the library is done at
// codepoint granularity, never on raw UTF-8 bytes.
using Codepoints = std::u32string;

// Strict UTF-8 decode/encode. Overlong forms, surrogates and truncated
// sequences throw MalformedUtf8.
Codepoints decode_utf8(std::string_view text);
std::string encode_utf8(const Codepoints& cps);

// Canonical normalization (NFC) scoped to the scripts this project carries
// data for: the Devanagari (U+0900..097F) and Bengali (U+0980..09FF) blocks.
// Those blocks get the full decompose / reorder / compose treatment with the
// Unicode 13 canonical data, including the composition exclusions (e.g. the
// Bengali nukta letters U+09DC/09DD/09DF stay decomposed, while the two-part
// vowel signs U+09CB/09CC compose). Codepoints outside the handled blocks
// have no canonical mappings relevant to this data and pass through intact.
Codepoints nfc(const Codepoints& cps);
std::string nfc_utf8(std::string_view text);

bool ends_with(const Codepoints& text, const Codepoints& suffix);

}  // namespace morphcode::uni
