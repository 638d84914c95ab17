#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spanlab/corpus.hpp"

namespace spanlab {

// UTF-8, tab-separated `word<TAB>alternative[,alternative...]`.
using AugmentDictionary = std::map<std::string, std::vector<std::string>>;
AugmentDictionary load_dictionary(const std::string& path);

struct AugmentConfig {
    struct Synonym {
        bool enabled = false;
        double replace_frac_lo = 0.10;
        double replace_frac_hi = 0.15;
        std::string dictionary_path;
    } synonym;
    struct Masking {
        bool enabled = false;
        double mask_prob = 0.05;
        std::string mask_token = "<MASK>";
    } masking;
    struct Codeswitch {
        bool enabled = false;
        double sample_frac = 0.15;
        double word_frac_lo = 0.20;
        double word_frac_hi = 0.30;
        std::string dictionary_path;
    } codeswitch;
    std::uint64_t seed = 42;

    void validate() const;
};

// Each augmenter preserves the label sequence bit-for-bit and never touches
// a token labeled B/I. Offsets are recomputed after surface changes.
Post synonym_replace(const Post& post, const AugmentConfig& cfg,
                     const AugmentDictionary& dict, std::mt19937_64& rng);
Post mask_tokens(const Post& post, const AugmentConfig& cfg, std::mt19937_64& rng);
// `selected` forces the per-post sampling decision; unset draws from rng.
Post codeswitch(const Post& post, const AugmentConfig& cfg,
                const AugmentDictionary& dict, std::mt19937_64& rng,
                std::optional<bool> selected = std::nullopt);

struct BacktranslateResult {
    Post post;
    double alignment_confidence = 0.0;
};
// External-service integration point: Urdu -> pivot -> Urdu with label
// transfer through the client's alignment.
class BacktranslateClient {
public:
    virtual ~BacktranslateClient() = default;
    virtual BacktranslateResult translate(const Post& post) = 0;
};
// Always throws NotImplemented; plug a BacktranslateClient into
// augment_corpus to enable the pathway.
BacktranslateResult backtranslate_stub(const Post& post);

// Fixed composition order: synonym -> mask -> codeswitch. Deterministic per
// seed via per-post derived seeds.
Corpus augment_corpus(const Corpus& corpus, const AugmentConfig& cfg,
                      BacktranslateClient* client = nullptr);

}  // namespace spanlab
