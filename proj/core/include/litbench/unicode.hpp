#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small unicode helpers shared across the library. Text enters the system as
// UTF-8; distance metrics and tokenizers work on decoded code points so that
// multi-byte characters count as single symbols.

namespace litbench::uni {

// Decodes UTF-8, replacing each invalid byte sequence with U+FFFD.
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(std::u32string_view s);

bool valid_utf8(std::string_view s);

// Canonical composition (NFC). Input must be valid UTF-8.
std::string nfc(std::string_view s);

// True for code points with the Unicode White_Space property.
bool is_space(char32_t c);

// Splits on runs of whitespace; no empty tokens.
std::vector<std::string> split_ws(std::string_view s);

// Trims leading/trailing whitespace and collapses interior runs to one space.
std::string collapse_ws(std::string_view s);

// Code-point-wise simple lowercase mapping.
std::string to_lower(std::string_view s);

}  // namespace litbench::uni
