#pragma once

#include <cstdint>

#include "spanlab/corpus.hpp"

namespace spanlab {

// Planted-lexicon corpus: toxic spans are runs of lexicon words inserted
// into random filler, with exact gold BIO tags. Deterministic per seed.
struct SynthConfig {
    std::uint64_t seed = 42;
    int n_posts = 600;
    int lexicon_size = 30;  // toxic words total, split across domains
    int n_domains = 3;
    double toxic_frac = 0.54;       // share of posts containing a span
    double multi_span_frac = 0.12;  // share of toxic posts with two spans
    int min_len = 6;
    int max_len = 14;
    int filler_vocab = 120;
    bool disjoint_lexicons = true;  // per-domain slices share no words

    void validate() const;
};

Corpus synth_corpus(const SynthConfig& cfg);

}  // namespace spanlab
