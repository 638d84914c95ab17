#pragma once

#include <map>
#include <string>
#include <vector>

#include "spanlab/corpus.hpp"

namespace spanlab {

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Character-offset span metrics for one post. Conventions: both sets empty
// gives F1 = 1; exactly one empty gives F1 = 0.
Prf span_prf(const CharSpanSet& pred, const CharSpanSet& gold);

// Macro average of per-post span F1.
double corpus_span_f1(const std::vector<CharSpanSet>& preds,
                      const std::vector<CharSpanSet>& golds);

// Binary-toxic micro P/R/F1 over all tokens of all sequences; pred/gold
// aligned pairwise. Sets trivially_perfect when neither side has a toxic
// token anywhere (F1 = 1 by convention).
Prf token_prf(const std::vector<TagSequence>& preds,
              const std::vector<TagSequence>& golds,
              bool* trivially_perfect = nullptr);

// Per-BIO-class P/R/F1 (index: O, B, I).
std::vector<Prf> token_prf_per_class(const std::vector<TagSequence>& preds,
                                     const std::vector<TagSequence>& golds);

double invalid_bio_rate(const std::vector<TagSequence>& seqs);

struct EvalReport {
    Prf span;       // macro over posts
    Prf token;      // micro over toxic tokens
    double invalid_rate = 0.0;
    std::size_t posts = 0;
    bool token_trivial = false;
};

// Full evaluation of predicted sequences against a gold corpus.
EvalReport evaluate(const Corpus& gold, const std::vector<TagSequence>& preds);

// Per-group evaluation keyed by domain or by the category attribute; posts
// with an empty category fall into "other".
enum class GroupBy { Domain, Category };
std::map<std::string, EvalReport> breakdown(const Corpus& gold,
                                            const std::vector<TagSequence>& preds,
                                            GroupBy key);

std::string eval_to_string(const EvalReport& r);

}  // namespace spanlab
