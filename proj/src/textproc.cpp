#include "spanlab/textproc.hpp"

#include <algorithm>
#include <fstream>

#include "spanlab/errors.hpp"
#include "spanlab/unicode.hpp"

namespace spanlab {

namespace uni = unicode;

Domain domain_from_string(const std::string& s) {
    if (s == "social_media" || s == "SocialMedia") return Domain::SocialMedia;
    if (s == "news" || s == "News") return Domain::News;
    if (s == "youtube" || s == "YouTube") return Domain::YouTube;
    return Domain::Other;
}

std::string domain_to_string(Domain d) {
    switch (d) {
        case Domain::SocialMedia: return "social_media";
        case Domain::News: return "news";
        case Domain::YouTube: return "youtube";
        default: return "other";
    }
}

RuleTable RuleTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open rule file: " + path);
    RuleTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected 'from<TAB>to'");
        Rule r;
        r.from = uni::decode_utf8(line.substr(0, tab));
        r.to = uni::decode_utf8(line.substr(tab + 1));
        t.rules.push_back(std::move(r));
    }
    std::stable_sort(t.rules.begin(), t.rules.end(),
                     [](const Rule& a, const Rule& b) { return a.from.size() > b.from.size(); });
    return t;
}

RuleTable RuleTable::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    RuleTable t;
    for (const auto& [f, to] : pairs)
        t.rules.push_back({uni::decode_utf8(f), uni::decode_utf8(to)});
    std::stable_sort(t.rules.begin(), t.rules.end(),
                     [](const Rule& a, const Rule& b) { return a.from.size() > b.from.size(); });
    return t;
}

PipelineConfig PipelineConfig::from_config(const Config& cfg) {
    PipelineConfig p;
    for (const auto& name : cfg.get_list("pipeline.steps")) {
        if (name == "nfc") p.steps.push_back(PipelineStep::UnicodeNFC);
        else if (name == "diacritic_strip") p.steps.push_back(PipelineStep::DiacriticStrip);
        else if (name == "roman_to_nastaliq") p.steps.push_back(PipelineStep::RomanToNastaliq);
        else if (name == "noise_removal") p.steps.push_back(PipelineStep::NoiseRemoval);
        else if (name == "whitespace_norm") p.steps.push_back(PipelineStep::WhitespaceNorm);
        else if (name == "word_segmentation") p.steps.push_back(PipelineStep::WordSegmentation);
        else throw config_error("unknown pipeline step: " + name);
    }
    const std::string tt = cfg.get_or("pipeline.translit_table", "");
    if (!tt.empty()) p.translit_table = RuleTable::load(tt);
    const std::string st = cfg.get_or("pipeline.segment_table", "");
    if (!st.empty()) p.segment_table = RuleTable::load(st);
    return p;
}

namespace {

std::vector<char32_t> default_diacritics() {
    std::vector<char32_t> v;
    for (char32_t c = 0x064B; c <= 0x065F; ++c) v.push_back(c);
    v.push_back(0x0670);
    return v;
}

struct Mapped {
    std::u32string text;
    std::vector<int> origin;
};

bool is_url_start(const std::u32string& t, std::size_t i) {
    static const std::u32string http = U"http://";
    static const std::u32string https = U"https://";
    static const std::u32string www = U"www.";
    auto starts = [&](const std::u32string& p) {
        return t.compare(i, p.size(), p) == 0;
    };
    return starts(http) || starts(https) || starts(www);
}

bool looks_like_email(const std::u32string& t, std::size_t start, std::size_t end) {
    // token contains '@' with a '.' after it
    std::size_t at = std::u32string::npos;
    for (std::size_t i = start; i < end; ++i)
        if (t[i] == U'@') { at = i; break; }
    if (at == std::u32string::npos || at == start) return false;
    for (std::size_t i = at + 1; i < end; ++i)
        if (t[i] == U'.') return true;
    return false;
}

Mapped strip_noise(const Mapped& in) {
    Mapped out;
    std::size_t i = 0;
    const std::u32string& t = in.text;
    while (i < t.size()) {
        if (uni::is_whitespace(t[i])) {
            out.text.push_back(t[i]);
            out.origin.push_back(in.origin[i]);
            ++i;
            continue;
        }
        if (is_url_start(t, i)) {
            while (i < t.size() && !uni::is_whitespace(t[i])) ++i;
            continue;
        }
        // email: scan the whitespace-delimited chunk once
        std::size_t end = i;
        while (end < t.size() && !uni::is_whitespace(t[end])) ++end;
        if (end > i && looks_like_email(t, i, end)) {
            i = end;
            continue;
        }
        // excessive punctuation: runs of 3+ of the same mark collapse to one
        for (; i < end; ++i) {
            if (uni::is_punctuation(t[i])) {
                std::size_t run = i;
                while (run < end && t[run] == t[i]) ++run;
                out.text.push_back(t[i]);
                out.origin.push_back(in.origin[i]);
                if (run - i >= 3) { i = run - 1; continue; }
                for (std::size_t k = i + 1; k < run; ++k) {
                    out.text.push_back(t[k]);
                    out.origin.push_back(in.origin[k]);
                }
                i = run - 1;
            } else {
                out.text.push_back(t[i]);
                out.origin.push_back(in.origin[i]);
            }
        }
    }
    return out;
}

Mapped normalize_whitespace(const Mapped& in) {
    Mapped out;
    std::size_t i = 0;
    const std::u32string& t = in.text;
    while (i < t.size()) {
        if (uni::is_whitespace(t[i])) {
            std::size_t j = i;
            while (j < t.size() && uni::is_whitespace(t[j])) ++j;
            if (!out.text.empty() && j < t.size()) {
                out.text.push_back(U' ');
                out.origin.push_back(in.origin[i]);
            }
            i = j;
        } else {
            out.text.push_back(t[i]);
            out.origin.push_back(in.origin[i]);
            ++i;
        }
    }
    return out;
}

// Rule application shared by transliteration and word segmentation.
Mapped apply_rules(const Mapped& in, const RuleTable& table) {
    if (table.empty()) return in;
    Mapped out;
    std::size_t i = 0;
    while (i < in.text.size()) {
        const RuleTable::Rule* hit = nullptr;
        for (const auto& r : table.rules) {
            if (in.text.compare(i, r.from.size(), r.from) == 0) {
                hit = &r;
                break;
            }
        }
        if (hit) {
            for (char32_t c : hit->to) {
                out.text.push_back(c);
                out.origin.push_back(in.origin[i]);
            }
            i += hit->from.size();
        } else {
            out.text.push_back(in.text[i]);
            out.origin.push_back(in.origin[i]);
            ++i;
        }
    }
    return out;
}

// Segmentation rules match whole whitespace-delimited words only.
Mapped apply_segmentation(const Mapped& in, const RuleTable& table) {
    if (table.empty()) return in;
    Mapped out;
    std::size_t i = 0;
    const std::u32string& t = in.text;
    while (i < t.size()) {
        if (uni::is_whitespace(t[i])) {
            out.text.push_back(t[i]);
            out.origin.push_back(in.origin[i]);
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < t.size() && !uni::is_whitespace(t[end])) ++end;
        std::u32string word = t.substr(i, end - i);
        const RuleTable::Rule* hit = nullptr;
        for (const auto& r : table.rules)
            if (r.from == word) { hit = &r; break; }
        if (hit) {
            for (char32_t c : hit->to) {
                out.text.push_back(c);
                out.origin.push_back(in.origin[i]);
            }
        } else {
            for (std::size_t k = i; k < end; ++k) {
                out.text.push_back(t[k]);
                out.origin.push_back(in.origin[k]);
            }
        }
        i = end;
    }
    return out;
}

}  // namespace

std::u32string transliterate_roman(const std::u32string& text, const RuleTable& table) {
    Mapped m;
    m.text = text;
    m.origin.resize(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) m.origin[i] = static_cast<int>(i);
    return apply_rules(m, table).text;
}

NormalizedText normalize(const RawText& raw, const PipelineConfig& cfg) {
    Mapped m;
    m.text = uni::decode_utf8(raw.content);
    m.origin.resize(m.text.size());
    for (std::size_t i = 0; i < m.text.size(); ++i) m.origin[i] = static_cast<int>(i);

    for (PipelineStep step : cfg.steps) {
        switch (step) {
            case PipelineStep::UnicodeNFC: {
                // NFC changes lengths; remap by re-normalizing per code point
                // run is not offset-exact, so normalize the whole text and
                // rebuild origins greedily: composed output chars inherit the
                // origin of the first source char that produced them.
                Mapped out;
                std::size_t src = 0;
                std::u32string acc;
                for (std::size_t i = 0; i <= m.text.size(); ++i) {
                    bool boundary = i == m.text.size() ||
                                    (i > 0 && uni::combining_class(m.text[i]) == 0);
                    if (boundary && !acc.empty()) {
                        std::u32string n = uni::nfc(acc);
                        for (char32_t c : n) {
                            out.text.push_back(c);
                            out.origin.push_back(m.origin[src]);
                        }
                        acc.clear();
                        src = i;
                    }
                    if (i < m.text.size()) acc.push_back(m.text[i]);
                }
                m = std::move(out);
                break;
            }
            case PipelineStep::DiacriticStrip: {
                const auto& set =
                    cfg.diacritics.empty() ? default_diacritics() : cfg.diacritics;
                Mapped out;
                for (std::size_t i = 0; i < m.text.size(); ++i) {
                    if (std::find(set.begin(), set.end(), m.text[i]) != set.end())
                        continue;
                    out.text.push_back(m.text[i]);
                    out.origin.push_back(m.origin[i]);
                }
                m = std::move(out);
                break;
            }
            case PipelineStep::RomanToNastaliq:
                m = apply_rules(m, cfg.translit_table);
                break;
            case PipelineStep::NoiseRemoval:
                m = strip_noise(m);
                break;
            case PipelineStep::WhitespaceNorm:
                m = normalize_whitespace(m);
                break;
            case PipelineStep::WordSegmentation:
                m = apply_segmentation(m, cfg.segment_table);
                break;
        }
    }
    return {std::move(m.text), std::move(m.origin)};
}

std::vector<Token> tokenize(const std::u32string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto emit = [&](std::size_t a, std::size_t b) {
        tokens.push_back({uni::encode_utf8(text.substr(a, b - a)),
                          static_cast<int>(a), static_cast<int>(b)});
    };
    while (i < text.size()) {
        if (uni::is_whitespace(text[i])) {
            ++i;
            continue;
        }
        if (uni::is_punctuation(text[i])) {
            emit(i, i + 1);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !uni::is_whitespace(text[j]) &&
               !uni::is_punctuation(text[j]))
            ++j;
        emit(i, j);
        i = j;
    }
    return tokens;
}

double levenshtein_similarity(const std::u32string& a, const std::u32string& b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    double dist = static_cast<double>(prev[m]);
    return 1.0 - dist / static_cast<double>(std::max(n, m));
}

std::vector<RawText> dedup(const std::vector<RawText>& posts, double threshold) {
    if (threshold <= 0.0 || threshold > 1.0)
        throw invalid_error("dedup threshold must be in (0, 1]");
    std::vector<RawText> kept;
    std::vector<std::u32string> kept_text;
    for (const auto& p : posts) {
        std::u32string t = unicode::decode_utf8(p.content);
        bool dup = false;
        for (const auto& k : kept_text) {
            if (levenshtein_similarity(t, k) >= threshold) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            kept.push_back(p);
            kept_text.push_back(std::move(t));
        }
    }
    return kept;
}

}  // namespace spanlab
