#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "spanlab/errors.hpp"
#include "spanlab/synth.hpp"
#include "spanlab/textproc.hpp"
#include "spanlab/unicode.hpp"

using namespace spanlab;

namespace {

constexpr BioLabel O = BioLabel::O;
constexpr BioLabel B = BioLabel::B_TOXIC;
constexpr BioLabel I = BioLabel::I_TOXIC;

int count_spans(const TagSequence& tags) {
    int n = 0;
    for (std::size_t t = 0; t < tags.size(); ++t)
        if (tags.labels[t] == B) ++n;
    return n;
}

}  // namespace

TEST_CASE("config validation") {
    SynthConfig cfg;
    cfg.validate();
    cfg.n_posts = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SynthConfig{};
    cfg.toxic_frac = 1.2;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SynthConfig{};
    cfg.min_len = 10;
    cfg.max_len = 8;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SynthConfig{};
    cfg.lexicon_size = 2;  // fewer than one word per domain
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("generation is byte-identical per seed") {
    SynthConfig cfg;
    cfg.n_posts = 100;
    Corpus a = synth_corpus(cfg);
    Corpus b = synth_corpus(cfg);
    CHECK(corpus_to_string(a) == corpus_to_string(b));
    cfg.seed = 43;
    Corpus c = synth_corpus(cfg);
    CHECK(corpus_to_string(c) != corpus_to_string(a));
}

TEST_CASE("stats track the configured targets") {
    SynthConfig cfg;  // 600 posts, 54% toxic, 12% multi-span
    Corpus c = synth_corpus(cfg);
    REQUIRE(c.size() == 600);
    int toxic = 0, multi = 0;
    std::map<Domain, int> per_domain;
    for (const auto& p : c.posts) {
        ++per_domain[p.domain];
        REQUIRE(p.gold);
        int spans = count_spans(*p.gold);
        if (spans > 0) ++toxic;
        if (spans > 1) ++multi;
        int len = static_cast<int>(p.tokens.size());
        CHECK(len >= cfg.min_len);
        CHECK(len <= cfg.max_len);
    }
    CHECK(toxic == doctest::Approx(0.54 * 600).epsilon(0.02));
    CHECK(multi == doctest::Approx(0.12 * toxic).epsilon(0.15));
    // round-robin domains: equal counts
    REQUIRE(per_domain.size() == 3);
    for (const auto& [d, n] : per_domain) CHECK(n == 200);
}

TEST_CASE("gold tags are valid bio and spans are separated") {
    SynthConfig cfg;
    cfg.n_posts = 300;
    Corpus c = synth_corpus(cfg);
    for (const auto& p : c.posts) {
        CHECK(p.gold->valid());
        // every span bounded by O (or the sequence edge); no adjacent spans
        const auto& l = p.gold->labels;
        for (std::size_t t = 1; t < l.size(); ++t)
            if (l[t] == B) CHECK(l[t - 1] == O);
    }
}

TEST_CASE("token offsets index the text exactly") {
    SynthConfig cfg;
    cfg.n_posts = 120;
    Corpus c = synth_corpus(cfg);
    for (const auto& p : c.posts) {
        std::u32string text = unicode::decode_utf8(p.normalized_text);
        int prev_end = -1;
        for (const auto& t : p.tokens) {
            REQUIRE(t.char_start > prev_end);
            REQUIRE(t.char_end <= static_cast<int>(text.size()));
            std::u32string slice = text.substr(t.char_start, t.char_end - t.char_start);
            CHECK(unicode::encode_utf8(slice) == t.surface);
            prev_end = t.char_end;
        }
    }
}

TEST_CASE("per-domain lexicons are disjoint and words stay in domain") {
    SynthConfig cfg;
    cfg.n_posts = 300;
    Corpus c = synth_corpus(cfg);
    // collect toxic surfaces per domain
    std::map<Domain, std::set<std::string>> toxic_words;
    for (const auto& p : c.posts)
        for (std::size_t t = 0; t < p.tokens.size(); ++t)
            if (p.gold->labels[t] != O)
                toxic_words[p.domain].insert(p.tokens[t].surface);
    REQUIRE(toxic_words.size() == 3);
    std::vector<std::set<std::string>> sets;
    for (auto& [d, s] : toxic_words) {
        CHECK(!s.empty());
        CHECK(s.size() <= 10);  // 30 lexicon words over 3 domains
        sets.push_back(s);
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (const auto& w : sets[i]) CHECK(sets[j].count(w) == 0);
    // filler never collides with any lexicon word
    std::set<std::string> all_toxic;
    for (const auto& s : sets) all_toxic.insert(s.begin(), s.end());
    for (const auto& p : c.posts)
        for (std::size_t t = 0; t < p.tokens.size(); ++t)
            if (p.gold->labels[t] == O) CHECK(all_toxic.count(p.tokens[t].surface) == 0);
}

TEST_CASE("shared lexicons reuse words across domains") {
    SynthConfig cfg;
    cfg.n_posts = 300;
    cfg.disjoint_lexicons = false;
    Corpus c = synth_corpus(cfg);
    std::map<Domain, std::set<std::string>> toxic_words;
    for (const auto& p : c.posts)
        for (std::size_t t = 0; t < p.tokens.size(); ++t)
            if (p.gold->labels[t] != O)
                toxic_words[p.domain].insert(p.tokens[t].surface);
    // with a shared pool of 30 words, overlap across domains is expected
    int overlap = 0;
    for (const auto& w : toxic_words[Domain::News])
        if (toxic_words[Domain::YouTube].count(w)) ++overlap;
    CHECK(overlap > 0);
}

TEST_CASE("post ids are unique and carry the domain") {
    SynthConfig cfg;
    cfg.n_posts = 90;
    Corpus c = synth_corpus(cfg);
    std::set<std::string> ids;
    for (const auto& p : c.posts) {
        CHECK(ids.insert(p.id).second);
        CHECK(p.id.rfind("synth-", 0) == 0);
        CHECK(p.id.find(domain_to_string(p.domain)) != std::string::npos);
    }
}
