#pragma once

#include <cstddef>
#include <string>

namespace spanlab::unicode {

namespace detail {

struct DecompRow {
    char32_t cp;
    unsigned char len;
    unsigned short offset;
};
struct CccRow {
    char32_t cp;
    unsigned char ccc;
};
struct CompRow {
    char32_t first;
    char32_t second;
    char32_t composed;
};

extern const DecompRow kDecompRows[];
extern const std::size_t kDecompRowCount;
extern const char32_t kDecompPool[];
extern const CccRow kCccRows[];
extern const std::size_t kCccRowCount;
extern const CompRow kCompRows[];
extern const std::size_t kCompRowCount;

}  // namespace detail

// UTF-8 <-> UTF-32. Decoding rejects malformed input.
std::u32string decode_utf8(const std::string& s);
std::string encode_utf8(const std::u32string& s);

int combining_class(char32_t cp);

// Canonical composition (NFC): decompose, reorder marks, recompose.
std::u32string nfc(const std::u32string& s);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);
bool is_arabic_script(char32_t cp);

}  // namespace spanlab::unicode
