#include "spanlab/augment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/unicode.hpp"

namespace spanlab {

AugmentDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open dictionary: " + path);
    AugmentDictionary dict;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw parse_error("dictionary line missing tab: " + line);
        std::string word = line.substr(0, tab);
        std::vector<std::string> alts;
        std::string rest = line.substr(tab + 1);
        std::istringstream parts(rest);
        std::string alt;
        while (std::getline(parts, alt, ','))
            if (!alt.empty()) alts.push_back(alt);
        if (word.empty() || alts.empty())
            throw parse_error("empty dictionary entry: " + line);
        dict[word] = std::move(alts);
    }
    return dict;
}

void AugmentConfig::validate() const {
    auto check01 = [](double p, const char* what) {
        if (p < 0.0 || p > 1.0)
            throw config_error(std::string(what) + " must be in [0, 1]");
    };
    check01(synonym.replace_frac_lo, "synonym.replace_frac_lo");
    check01(synonym.replace_frac_hi, "synonym.replace_frac_hi");
    if (synonym.replace_frac_lo > synonym.replace_frac_hi)
        throw config_error("synonym replace_frac range inverted");
    check01(masking.mask_prob, "masking.mask_prob");
    check01(codeswitch.sample_frac, "codeswitch.sample_frac");
    check01(codeswitch.word_frac_lo, "codeswitch.word_frac_lo");
    check01(codeswitch.word_frac_hi, "codeswitch.word_frac_hi");
    if (codeswitch.word_frac_lo > codeswitch.word_frac_hi)
        throw config_error("codeswitch word_frac range inverted");
    if (masking.enabled && masking.mask_token.empty())
        throw config_error("mask_token must be non-empty");
}

namespace {

bool token_toxic(const Post& post, std::size_t t) {
    return post.gold && t < post.gold->labels.size() &&
           post.gold->labels[t] != BioLabel::O;
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng()) / static_cast<double>(std::mt19937_64::max());
}

// Replaces token surfaces and splices the normalized text, shifting all
// code-point offsets after each edit.
Post apply_replacements(const Post& post,
                        const std::map<std::size_t, std::string>& repl) {
    if (repl.empty()) return post;
    Post out = post;
    std::u32string text = unicode::decode_utf8(post.normalized_text);
    int shift = 0;
    for (std::size_t t = 0; t < out.tokens.size(); ++t) {
        Token& tok = out.tokens[t];
        tok.char_start += shift;
        tok.char_end += shift;
        auto it = repl.find(t);
        if (it == repl.end()) continue;
        std::u32string nw = unicode::decode_utf8(it->second);
        int old_len = tok.char_end - tok.char_start;
        text.replace(static_cast<std::size_t>(tok.char_start),
                     static_cast<std::size_t>(old_len), nw);
        tok.surface = it->second;
        tok.char_end = tok.char_start + static_cast<int>(nw.size());
        shift += static_cast<int>(nw.size()) - old_len;
    }
    out.normalized_text = unicode::encode_utf8(text);
    return out;
}

}  // namespace

Post synonym_replace(const Post& post, const AugmentConfig& cfg,
                     const AugmentDictionary& dict, std::mt19937_64& rng) {
    cfg.validate();
    std::vector<std::size_t> eligible;
    for (std::size_t t = 0; t < post.tokens.size(); ++t)
        if (!token_toxic(post, t) && dict.count(post.tokens[t].surface))
            eligible.push_back(t);
    if (eligible.empty()) return post;

    double frac = cfg.synonym.replace_frac_lo +
                  unit(rng) * (cfg.synonym.replace_frac_hi - cfg.synonym.replace_frac_lo);
    std::size_t n = static_cast<std::size_t>(
        std::lround(frac * static_cast<double>(eligible.size())));
    if (n == 0) return post;

    std::vector<std::size_t> pick = eligible;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(n);
    std::sort(pick.begin(), pick.end());
    std::map<std::size_t, std::string> repl;
    for (std::size_t t : pick) {
        const auto& alts = dict.at(post.tokens[t].surface);
        repl[t] = alts[rng() % alts.size()];
    }
    return apply_replacements(post, repl);
}

Post mask_tokens(const Post& post, const AugmentConfig& cfg, std::mt19937_64& rng) {
    cfg.validate();
    std::map<std::size_t, std::string> repl;
    for (std::size_t t = 0; t < post.tokens.size(); ++t) {
        if (token_toxic(post, t)) continue;
        if (unit(rng) < cfg.masking.mask_prob) repl[t] = cfg.masking.mask_token;
    }
    return apply_replacements(post, repl);
}

Post codeswitch(const Post& post, const AugmentConfig& cfg,
                const AugmentDictionary& dict, std::mt19937_64& rng,
                std::optional<bool> selected) {
    cfg.validate();
    bool apply = selected ? *selected : unit(rng) < cfg.codeswitch.sample_frac;
    if (!apply) return post;

    std::vector<std::size_t> eligible;
    for (std::size_t t = 0; t < post.tokens.size(); ++t)
        if (!token_toxic(post, t) && dict.count(post.tokens[t].surface))
            eligible.push_back(t);
    if (eligible.empty()) return post;

    double frac = cfg.codeswitch.word_frac_lo +
                  unit(rng) * (cfg.codeswitch.word_frac_hi - cfg.codeswitch.word_frac_lo);
    std::size_t n = static_cast<std::size_t>(
        std::lround(frac * static_cast<double>(eligible.size())));
    if (n == 0) return post;

    std::vector<std::size_t> pick = eligible;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(n);
    std::sort(pick.begin(), pick.end());
    std::map<std::size_t, std::string> repl;
    for (std::size_t t : pick) {
        const auto& alts = dict.at(post.tokens[t].surface);
        repl[t] = alts[rng() % alts.size()];
    }
    return apply_replacements(post, repl);
}

BacktranslateResult backtranslate_stub(const Post&) {
    throw not_implemented_error(
        "back-translation requires an external MT service; implement "
        "BacktranslateClient and pass it to augment_corpus");
}

Corpus augment_corpus(const Corpus& corpus, const AugmentConfig& cfg,
                      BacktranslateClient* client) {
    cfg.validate();
    AugmentDictionary syn_dict, cs_dict;
    if (cfg.synonym.enabled) {
        if (cfg.synonym.dictionary_path.empty())
            throw config_error("synonym augmentation needs a dictionary path");
        syn_dict = load_dictionary(cfg.synonym.dictionary_path);
    }
    if (cfg.codeswitch.enabled) {
        if (cfg.codeswitch.dictionary_path.empty())
            throw config_error("codeswitch augmentation needs a dictionary path");
        cs_dict = load_dictionary(cfg.codeswitch.dictionary_path);
    }
    Corpus out;
    out.posts.reserve(corpus.posts.size());
    for (const auto& post : corpus.posts) {
        std::mt19937_64 rng(derive_seed(cfg.seed, "augment:" + post.id));
        Post p = post;
        if (cfg.synonym.enabled) p = synonym_replace(p, cfg, syn_dict, rng);
        if (cfg.masking.enabled) p = mask_tokens(p, cfg, rng);
        if (cfg.codeswitch.enabled) p = codeswitch(p, cfg, cs_dict, rng);
        if (client) {
            BacktranslateResult bt = client->translate(p);
            p = bt.post;
        }
        out.posts.push_back(std::move(p));
    }
    return out;
}

}  // namespace spanlab
