#pragma once

// Minimal UTF-8 support for tokenization. Letter classification and case
// folding cover Latin, Greek, Cyrillic and the common CJK/Hangul blocks;
// that is enough for the English corpora this library targets.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace stoprank::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed, >= 1
};

/// Decodes one code point at `pos`. Malformed sequences decode to
/// U+FFFD with length 1 so that scanning always makes progress.
Decoded decode(std::string_view text, std::size_t pos) noexcept;

/// Byte offset of the first malformed sequence, or nullopt if `text` is
/// well-formed UTF-8 (no overlongs, surrogates, or values above U+10FFFF).
std::optional<std::size_t> first_invalid_byte(std::string_view text) noexcept;

void append(std::string& out, char32_t code_point);

bool is_letter(char32_t c) noexcept;
bool is_whitespace(char32_t c) noexcept;
bool is_apostrophe(char32_t c) noexcept;
char32_t to_lower(char32_t c) noexcept;

std::string to_lower(std::string_view text);
std::size_t length(std::string_view text) noexcept;

}  // namespace stoprank::utf8
