#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spanlab/config.hpp"

namespace spanlab {

enum class Domain { SocialMedia, News, YouTube, Other };

Domain domain_from_string(const std::string& s);
std::string domain_to_string(Domain d);

struct RawText {
    std::string content;  // UTF-8
    std::string source_id;
    Domain domain = Domain::Other;
};

// Offsets are code-point indices into the normalized text.
struct Token {
    std::string surface;  // UTF-8
    int char_start = 0;   // inclusive
    int char_end = 0;     // exclusive
};

enum class PipelineStep {
    UnicodeNFC,
    DiacriticStrip,
    RomanToNastaliq,
    NoiseRemoval,
    WhitespaceNorm,
    WordSegmentation,
};

// One `roman<TAB>nastaliq` pair per line; '#' comments. Same file format is
// reused for word-segmentation tables (`word<TAB>seg1 seg2`).
struct RuleTable {
    struct Rule {
        std::u32string from;
        std::u32string to;
    };
    std::vector<Rule> rules;  // sorted longest-match-first

    static RuleTable load(const std::string& path);
    static RuleTable from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);
    bool empty() const { return rules.empty(); }
};

struct PipelineConfig {
    std::vector<PipelineStep> steps;  // applied in listed order
    RuleTable translit_table;
    RuleTable segment_table;
    // Combining marks stripped by DiacriticStrip; default is the Arabic
    // harakat range U+064B..U+065F plus the superscript alef U+0670.
    std::vector<char32_t> diacritics;

    static PipelineConfig from_config(const Config& cfg);
};

struct NormalizedText {
    std::u32string text;
    // origin[i] = code-point index in the raw content this output character
    // came from (first character of a rewritten region for inserted text).
    std::vector<int> origin;
};

// Normalization pipeline applying cfg.steps in order; idempotent.
NormalizedText normalize(const RawText& raw, const PipelineConfig& cfg);

// Longest-match-first rule application; unmatched characters pass through.
std::u32string transliterate_roman(const std::u32string& text, const RuleTable& table);

// Whitespace-delimited words with punctuation split off as separate tokens.
std::vector<Token> tokenize(const std::u32string& normalized_text);

// Normalized Levenshtein similarity; 1 - dist/max_len.
double levenshtein_similarity(const std::u32string& a, const std::u32string& b);

// Fuzzy dedup: keeps the first of any pair whose normalized similarity
// reaches the threshold; order is preserved.
std::vector<RawText> dedup(const std::vector<RawText>& posts, double threshold);

}  // namespace spanlab
