#include "spanlab/unicode.hpp"

#include <algorithm>
#include <vector>

#include "spanlab/errors.hpp"

namespace spanlab::unicode {

namespace {

using detail::kCccRowCount;
using detail::kCccRows;
using detail::kCompRowCount;
using detail::kCompRows;
using detail::kDecompPool;
using detail::kDecompRowCount;
using detail::kDecompRows;

// Hangul algorithmic constants (UAX #15).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr int kVCount = 21;
constexpr int kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = 11172;

const detail::DecompRow* find_decomp(char32_t cp) {
    const auto* end = kDecompRows + kDecompRowCount;
    const auto* it = std::lower_bound(
        kDecompRows, end, cp,
        [](const detail::DecompRow& r, char32_t c) { return r.cp < c; });
    return (it != end && it->cp == cp) ? it : nullptr;
}

char32_t find_composition(char32_t a, char32_t b) {
    const auto* end = kCompRows + kCompRowCount;
    const auto* it = std::lower_bound(
        kCompRows, end, std::pair<char32_t, char32_t>{a, b},
        [](const detail::CompRow& r, const std::pair<char32_t, char32_t>& k) {
            return r.first != k.first ? r.first < k.first : r.second < k.second;
        });
    return (it != end && it->first == a && it->second == b) ? it->composed : 0;
}

void decompose_into(char32_t cp, std::u32string& out) {
    if (cp >= kSBase && cp < kSBase + kSCount) {
        int idx = static_cast<int>(cp - kSBase);
        out.push_back(kLBase + idx / kNCount);
        out.push_back(kVBase + (idx % kNCount) / kTCount);
        if (idx % kTCount != 0) out.push_back(kTBase + idx % kTCount);
        return;
    }
    if (const auto* row = find_decomp(cp)) {
        // Pool rows store the full NFD expansion; no recursion needed.
        for (int i = 0; i < row->len; ++i) out.push_back(kDecompPool[row->offset + i]);
        return;
    }
    out.push_back(cp);
}

}  // namespace

int combining_class(char32_t cp) {
    const auto* end = kCccRows + kCccRowCount;
    const auto* it = std::lower_bound(
        kCccRows, end, cp,
        [](const detail::CccRow& r, char32_t c) { return r.cp < c; });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

std::u32string decode_utf8(const std::string& s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    while (i < s.size()) {
        unsigned char c = p[i];
        char32_t cp;
        int extra;
        if (c < 0x80) {
            cp = c;
            extra = 0;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else {
            throw parse_error("invalid UTF-8 byte at offset " + std::to_string(i));
        }
        if (i + extra >= s.size())
            throw parse_error("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (int k = 1; k <= extra; ++k) {
            unsigned char cc = p[i + k];
            if ((cc & 0xC0) != 0x80)
                throw parse_error("invalid UTF-8 continuation at offset " +
                                  std::to_string(i + k));
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw parse_error("invalid code point at offset " + std::to_string(i));
        static constexpr char32_t kMinByLen[4] = {0, 0x80, 0x800, 0x10000};
        if (cp < kMinByLen[extra])
            throw parse_error("overlong UTF-8 encoding at offset " + std::to_string(i));
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string encode_utf8(const std::u32string& s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
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

std::u32string nfc(const std::u32string& s) {
    // 1. Canonical decomposition.
    std::u32string d;
    d.reserve(s.size());
    for (char32_t cp : s) decompose_into(cp, d);

    // 2. Canonical ordering: stable-sort maximal runs of nonzero-ccc marks.
    std::size_t i = 0;
    while (i < d.size()) {
        if (combining_class(d[i]) == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < d.size() && combining_class(d[j]) != 0) ++j;
        std::stable_sort(d.begin() + i, d.begin() + j, [](char32_t a, char32_t b) {
            return combining_class(a) < combining_class(b);
        });
        i = j;
    }

    // 3. Canonical composition.
    std::u32string out;
    out.reserve(d.size());
    std::ptrdiff_t last_starter = -1;
    int last_cc = 0;
    for (char32_t cp : d) {
        int cc = combining_class(cp);
        if (last_starter >= 0) {
            char32_t starter = out[last_starter];
            // Algorithmic Hangul composition.
            if (cc == 0) {
                if (starter >= kLBase && starter < kLBase + 19 && cp >= kVBase &&
                    cp < kVBase + kVCount && last_cc == 0 &&
                    last_starter == static_cast<std::ptrdiff_t>(out.size()) - 1) {
                    out[last_starter] = kSBase + ((starter - kLBase) * kVCount +
                                                  (cp - kVBase)) * kTCount;
                    continue;
                }
                if (starter >= kSBase && starter < kSBase + kSCount &&
                    (starter - kSBase) % kTCount == 0 && cp > kTBase &&
                    cp < kTBase + kTCount && last_cc == 0 &&
                    last_starter == static_cast<std::ptrdiff_t>(out.size()) - 1) {
                    out[last_starter] = starter + (cp - kTBase);
                    continue;
                }
            }
            if (last_cc < cc || (last_cc == 0 && cc == 0 &&
                                 last_starter == static_cast<std::ptrdiff_t>(out.size()) - 1)) {
                if (char32_t comp = find_composition(starter, cp)) {
                    out[last_starter] = comp;
                    continue;
                }
            }
        }
        if (cc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_cc = 0;
        } else {
            last_cc = cc;
        }
        out.push_back(cp);
    }
    return out;
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\n':
        case U'\r':
        case U'\f':
        case U'\v':
        case 0x00A0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punctuation(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
               (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
    }
    switch (cp) {
        case 0x060C:  // Arabic comma
        case 0x061B:  // Arabic semicolon
        case 0x061F:  // Arabic question mark
        case 0x06D4:  // Arabic full stop
        case 0x2018:
        case 0x2019:
        case 0x201C:
        case 0x201D:
        case 0x2013:
        case 0x2014:
        case 0x2026:
            return true;
        default:
            return false;
    }
}

bool is_arabic_script(char32_t cp) {
    return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
           (cp >= 0xFB50 && cp <= 0xFDFF) || (cp >= 0xFE70 && cp <= 0xFEFF);
}

}  // namespace spanlab::unicode
