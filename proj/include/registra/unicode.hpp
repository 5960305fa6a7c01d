#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace registra::uni {

struct CodepointRange {
    char32_t lo;
    char32_t hi;
};

struct FoldEntry {
    char32_t cp;
    char32_t folded[3]; // zero-padded
};

extern const CodepointRange kLetterRanges[];
extern const std::size_t kLetterRangeCount;
extern const FoldEntry kFoldEntries[];
extern const std::size_t kFoldEntryCount;

// General category L*.
bool is_letter(char32_t cp);

// Appends the full case folding of cp to out (one to three codepoints).
void fold_append(char32_t cp, std::u32string& out);

// Decodes the UTF-8 sequence starting at data[pos]; advances pos past it.
// Malformed bytes decode to U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view data, std::size_t& pos);

// Appends cp to a UTF-8 byte string.
void encode_utf8(char32_t cp, std::string& out);

} // namespace registra::uni
