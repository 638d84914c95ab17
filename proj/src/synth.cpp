#include "spanlab/synth.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"

namespace spanlab {

void SynthConfig::validate() const {
    if (n_posts < 1) throw config_error("synth.n_posts must be >= 1");
    if (n_domains < 1 || n_domains > 3)
        throw config_error("synth.n_domains must be in [1, 3]");
    if (lexicon_size < n_domains)
        throw config_error("synth.lexicon_size must cover every domain");
    if (toxic_frac < 0.0 || toxic_frac > 1.0)
        throw config_error("synth.toxic_frac must be in [0, 1]");
    if (multi_span_frac < 0.0 || multi_span_frac > 1.0)
        throw config_error("synth.multi_span_frac must be in [0, 1]");
    if (min_len < 3 || max_len < min_len)
        throw config_error("synth length range invalid (min >= 3, max >= min)");
    if (filler_vocab < 2) throw config_error("synth.filler_vocab must be >= 2");
}

namespace {

// Pronounceable deterministic words, collision-free by construction.
std::vector<std::string> make_words(std::size_t n, std::mt19937_64& rng) {
    static const char* kCons[] = {"b", "ch", "d", "g", "j", "k", "l", "m",
                                  "n", "p", "r", "s", "sh", "t", "z", "kh"};
    static const char* kVow[] = {"a", "e", "i", "o", "u", "aa", "ai"};
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (out.size() < n) {
        std::string w;
        int syllables = 2 + static_cast<int>(rng() % 2);
        for (int s = 0; s < syllables; ++s) {
            w += kCons[rng() % 16];
            w += kVow[rng() % 7];
        }
        if (seen.insert(w).second) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

Corpus synth_corpus(const SynthConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(derive_seed(cfg.seed, "synth"));

    std::vector<std::string> words =
        make_words(static_cast<std::size_t>(cfg.lexicon_size + cfg.filler_vocab), rng);
    std::vector<std::string> toxic(words.begin(), words.begin() + cfg.lexicon_size);
    std::vector<std::string> filler(words.begin() + cfg.lexicon_size, words.end());

    // per-domain toxic slices
    std::vector<std::vector<std::string>> lexicon(cfg.n_domains);
    for (int i = 0; i < cfg.lexicon_size; ++i) {
        if (cfg.disjoint_lexicons)
            lexicon[i * cfg.n_domains / cfg.lexicon_size].push_back(toxic[i]);
        else
            for (auto& lex : lexicon) lex.push_back(toxic[i]);
    }

    static const Domain kDomains[3] = {Domain::SocialMedia, Domain::News,
                                       Domain::YouTube};
    Corpus corpus;
    corpus.posts.reserve(cfg.n_posts);
    for (int n = 0; n < cfg.n_posts; ++n) {
        const int dom = n % cfg.n_domains;
        const auto& lex = lexicon[dom];
        const int len = cfg.min_len + static_cast<int>(rng() % (cfg.max_len - cfg.min_len + 1));

        std::vector<std::string> surfaces(len);
        for (auto& s : surfaces) s = filler[rng() % filler.size()];
        std::vector<BioLabel> labels(len, BioLabel::O);

        double u = static_cast<double>(rng()) / static_cast<double>(std::mt19937_64::max());
        if (u < cfg.toxic_frac) {
            double v = static_cast<double>(rng()) / static_cast<double>(std::mt19937_64::max());
            int spans = v < cfg.multi_span_frac ? 2 : 1;
            int cursor = 0;
            for (int s = 0; s < spans; ++s) {
                int remaining_spans = spans - s - 1;
                // room for this span plus a separating gap per later span
                int max_span = len - cursor - remaining_spans * 2;
                if (max_span < 1) break;
                int span_len = 1 + static_cast<int>(rng() % std::min(3, max_span));
                int slack = len - cursor - span_len - remaining_spans * 2;
                int start = cursor + static_cast<int>(rng() % (slack + 1));
                for (int t = 0; t < span_len; ++t) {
                    surfaces[start + t] = lex[rng() % lex.size()];
                    labels[start + t] = t == 0 ? BioLabel::B_TOXIC : BioLabel::I_TOXIC;
                }
                cursor = start + span_len + 1;  // at least one O between spans
            }
        }

        Post post;
        post.domain = kDomains[dom];
        std::ostringstream id;
        id << "synth-" << domain_to_string(post.domain) << "-" << n;
        post.id = id.str();
        std::string text;
        int offset = 0;
        for (int t = 0; t < len; ++t) {
            if (t) {
                text += ' ';
                ++offset;
            }
            Token tok;
            tok.surface = surfaces[t];
            tok.char_start = offset;
            tok.char_end = offset + static_cast<int>(surfaces[t].size());
            offset = tok.char_end;
            text += surfaces[t];
            post.tokens.push_back(std::move(tok));
        }
        post.normalized_text = std::move(text);
        post.gold = TagSequence{std::move(labels)};
        corpus.posts.push_back(std::move(post));
    }
    return corpus;
}

}  // namespace spanlab
