#include "spanlab/explain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/unicode.hpp"

namespace spanlab {

AttributionMap integrated_gradients(const ScalarFn& f, const Tensor& x,
                                    const Tensor& baseline, int m) {
    if (m < 1) throw invalid_error("integration steps must be >= 1");
    if (baseline.rows != x.rows || baseline.cols != x.cols)
        throw invalid_error("baseline shape must match the input embeddings");

    AttributionMap out;
    out.steps = m;
    out.baseline = "custom";
    out.f_input = f(x, nullptr);
    out.f_baseline = f(baseline, nullptr);

    Tensor accum = Tensor::zeros(x.rows, x.cols);
    for (int k = 0; k < m; ++k) {
        double alpha = (k + 0.5) / static_cast<double>(m);
        Tensor xa = x;
        for (std::size_t i = 0; i < xa.size(); ++i)
            xa.v[i] = baseline.v[i] + alpha * (x.v[i] - baseline.v[i]);
        Tensor dx;
        double fv = f(xa, &dx);
        if (!std::isfinite(fv))
            throw invalid_error("non-finite value at integration step " +
                                std::to_string(k));
        for (double g : dx.v)
            if (!std::isfinite(g))
                throw invalid_error("non-finite gradient at integration step " +
                                    std::to_string(k));
        for (std::size_t i = 0; i < accum.size(); ++i) accum.v[i] += dx.v[i];
    }

    double total = 0.0;
    out.token_scores.assign(x.rows, 0.0);
    for (int t = 0; t < x.rows; ++t)
        for (int i = 0; i < x.cols; ++i) {
            double a = (x.at(t, i) - baseline.at(t, i)) * accum.at(t, i) /
                       static_cast<double>(m);
            out.token_scores[t] += a;
            total += a;
        }
    out.completeness_residual = std::abs(total - (out.f_input - out.f_baseline));
    return out;
}

AttributionMap integrated_gradients(const LabelerParams& p,
                                    const std::vector<int>& token_ids,
                                    const LossConfig& loss_cfg, int m,
                                    const Tensor* baseline) {
    EncodeCache c = encode(p, token_ids);
    Tensor zero = Tensor::zeros(c.x.rows, c.x.cols);
    const Tensor& base = baseline ? *baseline : zero;
    ScalarFn f = [&](const Tensor& x, Tensor* dx) {
        return toxicity_score(p, x, loss_cfg, dx);
    };
    AttributionMap out = integrated_gradients(f, c.x, base, m);
    out.baseline = baseline ? "custom" : "zero-embedding";
    return out;
}

std::vector<double> mean_incoming_attention(const LabelerParams& p,
                                            const std::vector<int>& token_ids) {
    if (p.config.kind != EncoderKind::EmbedSelfAttention)
        throw unsupported_error("attention analysis requires the self-attention encoder");
    EncodeCache c = encode(p, token_ids);
    const int t_len = static_cast<int>(token_ids.size());
    std::vector<double> mean(t_len, 0.0);
    for (const Tensor& alpha : c.attention)
        for (int i = 0; i < t_len; ++i)
            for (int j = 0; j < t_len; ++j) mean[j] += alpha.at(i, j);
    double denom = static_cast<double>(c.attention.size()) * t_len;
    for (auto& v : mean) v /= denom;
    return mean;
}

std::vector<int> attention_indicators(const LabelerParams& p,
                                      const std::vector<int>& token_ids,
                                      double threshold) {
    std::vector<double> mean = mean_incoming_attention(p, token_ids);
    std::vector<int> selected;
    for (int j = 0; j < static_cast<int>(mean.size()); ++j)
        if (mean[j] > threshold) selected.push_back(j);
    return selected;
}

// ---------------------------------------------------------------------------
// ARE

void RationaleConfig::validate() const {
    if (lambda < 0.0) throw config_error("rationale lambda must be >= 0");
    if (use_topk) {
        if (k < 1) throw config_error("rationale k must be >= 1");
    } else if (tau <= 0.0 || tau >= 1.0) {
        throw config_error("rationale tau must be in (0, 1)");
    }
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct AreForward {
    EncodeCache cache;
    std::vector<double> gates;
    std::vector<double> rep;  // gate-weighted mean hidden state
    double logit = 0.0;
    double prob = 0.0;
};

AreForward are_forward(const LabelerParams& p, const std::vector<int>& ids) {
    AreForward f;
    f.cache = encode(p, ids);
    const int t_len = f.cache.hidden.rows;
    const int h = f.cache.hidden.cols;
    const Tensor& gw = p.tensor("are.gate.w");
    const Tensor& gb = p.tensor("are.gate.b");
    const Tensor& cw = p.tensor("are.cls.w");
    const Tensor& cb = p.tensor("are.cls.b");
    f.gates.resize(t_len);
    f.rep.assign(h, 0.0);
    for (int t = 0; t < t_len; ++t) {
        double z = gb.v[0];
        for (int i = 0; i < h; ++i) z += gw.v[i] * f.cache.hidden.at(t, i);
        f.gates[t] = sigmoid(z);
        for (int i = 0; i < h; ++i) f.rep[i] += f.gates[t] * f.cache.hidden.at(t, i);
    }
    for (auto& r : f.rep) r /= static_cast<double>(t_len);
    f.logit = cb.v[0];
    for (int i = 0; i < h; ++i) f.logit += cw.v[i] * f.rep[i];
    f.prob = sigmoid(f.logit);
    return f;
}

}  // namespace

std::vector<double> are_gates(const LabelerParams& p, const std::vector<int>& ids) {
    return are_forward(p, ids).gates;
}

LabelerParams are_train(const Corpus& corpus, const RationaleConfig& rcfg,
                        const AreTrainConfig& tcfg, const EncoderConfig& encoder_in) {
    rcfg.validate();
    if (corpus.posts.empty()) throw invalid_error("empty corpus");
    std::vector<std::string> vocab{"<UNK>", "<MASK>"};
    {
        std::set<std::string> seen(vocab.begin(), vocab.end());
        for (const auto& post : corpus.posts)
            for (const auto& tok : post.tokens)
                if (seen.insert(tok.surface).second) vocab.push_back(tok.surface);
    }
    EncoderConfig enc = encoder_in;
    enc.vocab_size = static_cast<int>(vocab.size());
    enc.dropout_rate = 0.0;
    enc.seed = derive_seed(tcfg.seed, "are-init");
    LabelerParams p = init_params(enc, vocab);

    const int h = enc.hidden_dim;
    std::mt19937_64 rng(derive_seed(tcfg.seed, "are-heads"));
    auto small_init = [&](int n) {
        Tensor t = Tensor::zeros(1, n);
        double s = 1.0 / std::sqrt(static_cast<double>(h));
        for (auto& x : t.v) {
            double u = static_cast<double>(rng()) / static_cast<double>(std::mt19937_64::max());
            x = (2.0 * u - 1.0) * s;
        }
        return t;
    };
    p.tensors["are.gate.w"] = small_init(h);
    p.tensors["are.gate.b"] = Tensor::zeros(1, 1);
    p.tensors["are.cls.w"] = small_init(h);
    p.tensors["are.cls.b"] = Tensor::zeros(1, 1);

    for (int epoch = 0; epoch < tcfg.epochs; ++epoch) {
        for (const auto& post : corpus.posts) {
            if (post.tokens.empty() || !post.gold) continue;
            std::vector<int> ids = tokens_to_ids(p, post.tokens);
            AreForward f = are_forward(p, ids);
            const int t_len = static_cast<int>(ids.size());
            const double y = post.has_toxic_token() ? 1.0 : 0.0;

            Gradients grads = zero_gradients(p);
            // BCE head
            double dlogit = f.prob - y;
            Tensor& gcw = grads.at("are.cls.w");
            for (int i = 0; i < h; ++i) gcw.v[i] += dlogit * f.rep[i];
            grads.at("are.cls.b").v[0] += dlogit;
            const Tensor& cw = p.tensor("are.cls.w");
            std::vector<double> drep(h);
            for (int i = 0; i < h; ++i) drep[i] = dlogit * cw.v[i];

            Tensor dhidden = Tensor::zeros(t_len, h);
            Tensor& ggw = grads.at("are.gate.w");
            const Tensor& gw = p.tensor("are.gate.w");
            const double inv_t = 1.0 / static_cast<double>(t_len);
            for (int t = 0; t < t_len; ++t) {
                double dg = rcfg.lambda * inv_t;  // soft L1 sparsity term
                for (int i = 0; i < h; ++i) {
                    dg += drep[i] * f.cache.hidden.at(t, i) * inv_t;
                    dhidden.at(t, i) += drep[i] * f.gates[t] * inv_t;
                }
                double dz = dg * f.gates[t] * (1.0 - f.gates[t]);
                for (int i = 0; i < h; ++i) {
                    ggw.v[i] += dz * f.cache.hidden.at(t, i);
                    dhidden.at(t, i) += dz * gw.v[i];
                }
                grads.at("are.gate.b").v[0] += dz;
            }
            encoder_backward_hidden(p, f.cache, dhidden, &grads, nullptr);

            for (auto& [name, g] : grads) {
                Tensor& t = p.tensor(name);
                for (std::size_t i = 0; i < t.size(); ++i) t.v[i] -= tcfg.lr * g.v[i];
            }
        }
    }
    return p;
}

TagSequence are_extract(const LabelerParams& p, const std::vector<int>& ids,
                        const RationaleConfig& rcfg) {
    rcfg.validate();
    std::vector<double> gates = are_gates(p, ids);
    const int t_len = static_cast<int>(gates.size());
    std::vector<bool> selected(t_len, false);
    if (rcfg.use_topk) {
        std::vector<int> order(t_len);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return gates[a] > gates[b]; });
        for (int i = 0; i < std::min(rcfg.k, t_len); ++i) selected[order[i]] = true;
    } else {
        for (int t = 0; t < t_len; ++t) selected[t] = gates[t] > rcfg.tau;
    }
    TagSequence tags;
    tags.labels.resize(t_len, BioLabel::O);
    for (int t = 0; t < t_len; ++t) {
        if (!selected[t]) continue;
        tags.labels[t] = (t > 0 && selected[t - 1]) ? BioLabel::I_TOXIC : BioLabel::B_TOXIC;
    }
    return tags;
}

// ---------------------------------------------------------------------------
// Reports

std::vector<int> attribution_buckets(const std::vector<double>& scores) {
    std::vector<int> buckets(scores.size(), 0);
    if (scores.empty()) return buckets;
    double lo = *std::min_element(scores.begin(), scores.end());
    double hi = *std::max_element(scores.begin(), scores.end());
    if (hi - lo <= 0.0) return buckets;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int b = static_cast<int>((scores[i] - lo) / (hi - lo) * 5.0);
        buckets[i] = std::min(b, 4);
    }
    return buckets;
}

namespace {

bool has_arabic(const std::string& utf8) {
    for (char32_t cp : unicode::decode_utf8(utf8))
        if (unicode::is_arabic_script(cp)) return true;
    return false;
}

std::string html_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// standard 8-color escapes only
const char* kAnsiBuckets[5] = {"\x1b[37m", "\x1b[36m", "\x1b[33m", "\x1b[35m",
                               "\x1b[31m"};
const char* kHtmlBuckets[5] = {"#f7f7f7", "#fee0d2", "#fcae91", "#fb6a4a",
                               "#cb181d"};

std::string render_tokens(const Post& post, const std::vector<int>& buckets,
                          const std::vector<bool>& marked, HighlightFormat format) {
    std::ostringstream out;
    if (format == HighlightFormat::Html) {
        bool rtl = has_arabic(post.normalized_text);
        out << "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"></head>\n"
            << "<body><p dir=\"" << (rtl ? "rtl" : "ltr") << "\" style=\"font-size:1.2em\">";
        for (std::size_t t = 0; t < post.tokens.size(); ++t) {
            if (t) out << ' ';
            const std::string text = html_escape(post.tokens[t].surface);
            if (!buckets.empty()) {
                out << "<span style=\"background:" << kHtmlBuckets[buckets[t]]
                    << "\">" << text << "</span>";
            } else if (marked[t]) {
                // contiguous marked runs share one highlighted region
                if (t == 0 || !marked[t - 1]) out << "<span style=\"background:#fb6a4a\">";
                out << text;
                if (t + 1 == post.tokens.size() || !marked[t + 1]) out << "</span>";
            } else {
                out << text;
            }
        }
        out << "</p></body></html>\n";
    } else {
        for (std::size_t t = 0; t < post.tokens.size(); ++t) {
            if (t) out << ' ';
            if (!buckets.empty()) {
                out << kAnsiBuckets[buckets[t]] << post.tokens[t].surface << "\x1b[0m";
            } else if (marked[t]) {
                out << "\x1b[41m" << post.tokens[t].surface << "\x1b[0m";
            } else {
                out << post.tokens[t].surface;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_highlights(const Post& post, const TagSequence& tags,
                              HighlightFormat format) {
    if (tags.size() != post.tokens.size())
        throw invalid_error("tag/token length mismatch in post " + post.id);
    std::vector<bool> marked(post.tokens.size(), false);
    for (std::size_t t = 0; t < tags.size(); ++t)
        marked[t] = tags.labels[t] != BioLabel::O;
    return render_tokens(post, {}, marked, format);
}

std::string render_highlights(const Post& post, const AttributionMap& attr,
                              HighlightFormat format) {
    if (attr.token_scores.size() != post.tokens.size())
        throw invalid_error("attribution/token length mismatch in post " + post.id);
    return render_tokens(post, attribution_buckets(attr.token_scores), {}, format);
}

}  // namespace spanlab
