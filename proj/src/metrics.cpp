#include "spanlab/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "spanlab/errors.hpp"

namespace spanlab {

Prf span_prf(const CharSpanSet& pred, const CharSpanSet& gold) {
    Prf r;
    if (pred.empty() && gold.empty()) {
        r.precision = r.recall = r.f1 = 1.0;
        return r;
    }
    if (pred.empty() || gold.empty()) return r;  // all zero
    std::size_t inter = 0;
    for (int c : pred)
        if (gold.count(c)) ++inter;
    r.precision = static_cast<double>(inter) / static_cast<double>(pred.size());
    r.recall = static_cast<double>(inter) / static_cast<double>(gold.size());
    if (r.precision + r.recall > 0)
        r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

double corpus_span_f1(const std::vector<CharSpanSet>& preds,
                      const std::vector<CharSpanSet>& golds) {
    if (preds.size() != golds.size())
        throw invalid_error("pred/gold post count mismatch");
    if (preds.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i)
        sum += span_prf(preds[i], golds[i]).f1;
    return sum / static_cast<double>(preds.size());
}

namespace {

bool toxic(BioLabel l) { return l != BioLabel::O; }

}  // namespace

Prf token_prf(const std::vector<TagSequence>& preds,
              const std::vector<TagSequence>& golds, bool* trivially_perfect) {
    if (preds.size() != golds.size())
        throw invalid_error("pred/gold sequence count mismatch");
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t s = 0; s < preds.size(); ++s) {
        if (preds[s].size() != golds[s].size())
            throw invalid_error("pred/gold length mismatch in sequence " +
                                std::to_string(s));
        for (std::size_t t = 0; t < preds[s].size(); ++t) {
            bool p = toxic(preds[s].labels[t]);
            bool g = toxic(golds[s].labels[t]);
            if (p && g) ++tp;
            else if (p) ++fp;
            else if (g) ++fn;
        }
    }
    Prf r;
    if (trivially_perfect) *trivially_perfect = false;
    if (tp + fp + fn == 0) {
        r.precision = r.recall = r.f1 = 1.0;
        if (trivially_perfect) *trivially_perfect = true;
        return r;
    }
    r.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    r.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    if (r.precision + r.recall > 0)
        r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

std::vector<Prf> token_prf_per_class(const std::vector<TagSequence>& preds,
                                     const std::vector<TagSequence>& golds) {
    if (preds.size() != golds.size())
        throw invalid_error("pred/gold sequence count mismatch");
    std::size_t tp[3] = {}, fp[3] = {}, fn[3] = {};
    for (std::size_t s = 0; s < preds.size(); ++s) {
        for (std::size_t t = 0; t < preds[s].size(); ++t) {
            int p = static_cast<int>(preds[s].labels[t]);
            int g = static_cast<int>(golds[s].labels[t]);
            if (p == g) ++tp[p];
            else {
                ++fp[p];
                ++fn[g];
            }
        }
    }
    std::vector<Prf> out(3);
    for (int c = 0; c < 3; ++c) {
        Prf& r = out[c];
        r.precision = tp[c] + fp[c] > 0
                          ? static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fp[c])
                          : 0.0;
        r.recall = tp[c] + fn[c] > 0
                       ? static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fn[c])
                       : 0.0;
        if (r.precision + r.recall > 0)
            r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    }
    return out;
}

double invalid_bio_rate(const std::vector<TagSequence>& seqs) {
    if (seqs.empty()) return 0.0;
    std::size_t invalid = 0;
    for (const auto& s : seqs)
        if (!s.valid()) ++invalid;
    return static_cast<double>(invalid) / static_cast<double>(seqs.size());
}

EvalReport evaluate(const Corpus& gold, const std::vector<TagSequence>& preds) {
    if (gold.posts.size() != preds.size())
        throw invalid_error("pred/gold post count mismatch");
    EvalReport r;
    r.posts = preds.size();
    std::vector<TagSequence> gold_seqs;
    std::vector<CharSpanSet> pred_spans, gold_spans;
    double span_p = 0, span_r = 0, span_f = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const Post& post = gold.posts[i];
        if (!post.gold)
            throw invalid_error("post " + post.id + " has no gold labels");
        gold_seqs.push_back(*post.gold);
        CharSpanSet ps = spans_from_tags(post.tokens, preds[i]);
        CharSpanSet gs = spans_from_tags(post.tokens, *post.gold);
        Prf prf = span_prf(ps, gs);
        span_p += prf.precision;
        span_r += prf.recall;
        span_f += prf.f1;
    }
    if (r.posts > 0) {
        r.span.precision = span_p / static_cast<double>(r.posts);
        r.span.recall = span_r / static_cast<double>(r.posts);
        r.span.f1 = span_f / static_cast<double>(r.posts);
    }
    r.token = token_prf(preds, gold_seqs, &r.token_trivial);
    r.invalid_rate = invalid_bio_rate(preds);
    return r;
}

std::map<std::string, EvalReport> breakdown(const Corpus& gold,
                                            const std::vector<TagSequence>& preds,
                                            GroupBy key) {
    if (gold.posts.size() != preds.size())
        throw invalid_error("pred/gold post count mismatch");
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < gold.posts.size(); ++i) {
        std::string g = key == GroupBy::Domain
                            ? domain_to_string(gold.posts[i].domain)
                            : (gold.posts[i].category.empty() ? "other"
                                                              : gold.posts[i].category);
        groups[g].push_back(i);
    }
    std::map<std::string, EvalReport> out;
    for (const auto& [name, idx] : groups) {
        Corpus sub;
        std::vector<TagSequence> sub_preds;
        for (std::size_t i : idx) {
            sub.posts.push_back(gold.posts[i]);
            sub_preds.push_back(preds[i]);
        }
        out[name] = evaluate(sub, sub_preds);
    }
    return out;
}

std::string eval_to_string(const EvalReport& r) {
    std::ostringstream out;
    out << "posts=" << r.posts << '\n';
    out << "span_p=" << r.span.precision << '\n';
    out << "span_r=" << r.span.recall << '\n';
    out << "span_f1=" << r.span.f1 << '\n';
    out << "token_p=" << r.token.precision << '\n';
    out << "token_r=" << r.token.recall << '\n';
    out << "token_f1=" << r.token.f1 << '\n';
    out << "invalid_bio_rate=" << r.invalid_rate << '\n';
    if (r.token_trivial) out << "note=no toxic tokens in pred or gold\n";
    return out.str();
}

}  // namespace spanlab
