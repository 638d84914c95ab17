#include "spanlab/labeler.hpp"

#include <cmath>
#include <unordered_map>

#include "spanlab/errors.hpp"

namespace spanlab {

namespace {

constexpr int L = kNumLabels;

void check_grad_finite(const Gradients& g) {
    for (const auto& [name, t] : g)
        for (double x : t.v)
            if (!std::isfinite(x))
                throw invalid_error("non-finite gradient in parameter " + name);
}

std::vector<double> make_dropout_mask(std::size_t n, double rate, std::mt19937_64& rng) {
    std::vector<double> mask(n);
    const double keep = 1.0 - rate;
    for (auto& m : mask) {
        double u = static_cast<double>(rng()) / static_cast<double>(std::mt19937_64::max());
        m = u < keep ? 1.0 / keep : 0.0;
    }
    return mask;
}

}  // namespace

void EncoderConfig::validate() const {
    if (vocab_size < 2) throw config_error("vocab_size must be >= 2 (UNK and mask)");
    if (embed_dim <= 0 || hidden_dim <= 0)
        throw config_error("encoder dimensions must be positive");
    if (kind == EncoderKind::EmbedBiRecurrent && hidden_dim % 2 != 0)
        throw config_error("hidden_dim must be even for the bidirectional encoder");
    if (kind == EncoderKind::EmbedSelfAttention) {
        if (attention_heads <= 0 || hidden_dim % attention_heads != 0)
            throw config_error("attention_heads must divide hidden_dim");
    }
    if (dropout_rate < 0.0 || dropout_rate >= 1.0)
        throw config_error("dropout_rate must be in [0, 1)");
}

const Tensor& LabelerParams::tensor(const std::string& name) const {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw invalid_error("missing parameter tensor: " + name);
    return it->second;
}

Tensor& LabelerParams::tensor(const std::string& name) {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw invalid_error("missing parameter tensor: " + name);
    return it->second;
}

LabelerParams init_params(const EncoderConfig& cfg, const std::vector<std::string>& vocab) {
    EncoderConfig c = cfg;
    if (c.vocab_size == 0) c.vocab_size = static_cast<int>(vocab.size());
    c.validate();
    if (static_cast<int>(vocab.size()) != c.vocab_size)
        throw invalid_error("vocab size does not match encoder config");

    LabelerParams p;
    p.config = c;
    p.vocab = vocab;

    std::mt19937_64 rng(c.seed);
    auto uniform_init = [&](int rows, int cols, int fan_in) {
        Tensor t = Tensor::zeros(rows, cols);
        const double scale = 1.0 / std::sqrt(static_cast<double>(fan_in));
        for (auto& x : t.v) {
            double u = static_cast<double>(rng()) /
                       static_cast<double>(std::mt19937_64::max());
            x = (2.0 * u - 1.0) * scale;
        }
        return t;
    };

    const int d = c.embed_dim, h = c.hidden_dim;
    // Tensor creation order is fixed so identical seeds give identical params.
    p.tensors["embed"] = uniform_init(c.vocab_size, d, d);
    if (c.kind == EncoderKind::EmbedBiRecurrent) {
        const int dh = h / 2;
        p.tensors["rnn.wxf"] = uniform_init(dh, d, d);
        p.tensors["rnn.whf"] = uniform_init(dh, dh, dh);
        p.tensors["rnn.bf"] = Tensor::zeros(1, dh);
        p.tensors["rnn.wxb"] = uniform_init(dh, d, d);
        p.tensors["rnn.whb"] = uniform_init(dh, dh, dh);
        p.tensors["rnn.bb"] = Tensor::zeros(1, dh);
    } else {
        p.tensors["attn.wq"] = uniform_init(h, d, d);
        p.tensors["attn.wk"] = uniform_init(h, d, d);
        p.tensors["attn.wv"] = uniform_init(h, d, d);
        p.tensors["attn.wo"] = uniform_init(h, h, h);
        p.tensors["attn.bo"] = Tensor::zeros(1, h);
    }
    p.tensors["emit.w"] = uniform_init(L, h, h);
    p.tensors["emit.b"] = Tensor::zeros(1, L);
    p.tensors["crf.trans"] = Tensor::zeros(L, L);
    p.tensors["crf.start"] = Tensor::zeros(1, L);
    p.tensors["crf.stop"] = Tensor::zeros(1, L);
    return p;
}

std::vector<int> tokens_to_ids(const LabelerParams& p, const std::vector<Token>& tokens) {
    std::unordered_map<std::string, int> index;
    index.reserve(p.vocab.size());
    for (std::size_t i = 0; i < p.vocab.size(); ++i) index.emplace(p.vocab[i], static_cast<int>(i));
    std::vector<int> ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto it = index.find(t.surface);
        ids.push_back(it == index.end() ? kUnkIndex : it->second);
    }
    return ids;
}

// ---------------------------------------------------------------------------
// Forward pass

namespace {

void encode_from_x(const LabelerParams& p, EncodeCache& c, bool training,
                   std::mt19937_64* rng) {
    const EncoderConfig& cfg = p.config;
    const int t_len = c.x.rows;
    const int d = cfg.embed_dim, h = cfg.hidden_dim;

    if (training && cfg.dropout_rate > 0.0) {
        if (!rng) throw invalid_error("training-mode encode requires an RNG");
        c.drop_x = make_dropout_mask(c.x.size(), cfg.dropout_rate, *rng);
        for (std::size_t i = 0; i < c.x.size(); ++i) c.x.v[i] *= c.drop_x[i];
    }

    c.hidden = Tensor::zeros(t_len, h);
    if (cfg.kind == EncoderKind::EmbedBiRecurrent) {
        const int dh = h / 2;
        const Tensor& wxf = p.tensor("rnn.wxf");
        const Tensor& whf = p.tensor("rnn.whf");
        const Tensor& bf = p.tensor("rnn.bf");
        const Tensor& wxb = p.tensor("rnn.wxb");
        const Tensor& whb = p.tensor("rnn.whb");
        const Tensor& bb = p.tensor("rnn.bb");
        c.hf = Tensor::zeros(t_len, dh);
        c.hb = Tensor::zeros(t_len, dh);
        for (int t = 0; t < t_len; ++t) {
            for (int j = 0; j < dh; ++j) {
                double a = bf.v[j];
                for (int i = 0; i < d; ++i) a += wxf.at(j, i) * c.x.at(t, i);
                if (t > 0)
                    for (int i = 0; i < dh; ++i) a += whf.at(j, i) * c.hf.at(t - 1, i);
                c.hf.at(t, j) = std::tanh(a);
            }
        }
        for (int t = t_len - 1; t >= 0; --t) {
            for (int j = 0; j < dh; ++j) {
                double a = bb.v[j];
                for (int i = 0; i < d; ++i) a += wxb.at(j, i) * c.x.at(t, i);
                if (t + 1 < t_len)
                    for (int i = 0; i < dh; ++i) a += whb.at(j, i) * c.hb.at(t + 1, i);
                c.hb.at(t, j) = std::tanh(a);
            }
        }
        for (int t = 0; t < t_len; ++t) {
            for (int j = 0; j < dh; ++j) {
                c.hidden.at(t, j) = c.hf.at(t, j);
                c.hidden.at(t, dh + j) = c.hb.at(t, j);
            }
        }
    } else {
        const int heads = cfg.attention_heads;
        const int dk = h / heads;
        const double scale = 1.0 / std::sqrt(static_cast<double>(dk));
        const Tensor& wq = p.tensor("attn.wq");
        const Tensor& wk = p.tensor("attn.wk");
        const Tensor& wv = p.tensor("attn.wv");
        const Tensor& wo = p.tensor("attn.wo");
        const Tensor& bo = p.tensor("attn.bo");
        auto project = [&](const Tensor& w) {
            Tensor out = Tensor::zeros(t_len, h);
            for (int t = 0; t < t_len; ++t)
                for (int j = 0; j < h; ++j) {
                    double a = 0.0;
                    for (int i = 0; i < d; ++i) a += w.at(j, i) * c.x.at(t, i);
                    out.at(t, j) = a;
                }
            return out;
        };
        c.q = project(wq);
        c.k = project(wk);
        c.vproj = project(wv);
        c.ctx = Tensor::zeros(t_len, h);
        c.attention.clear();
        for (int head = 0; head < heads; ++head) {
            Tensor alpha = Tensor::zeros(t_len, t_len);
            const int off = head * dk;
            for (int i = 0; i < t_len; ++i) {
                double mx = -1e300;
                std::vector<double> logits(t_len);
                for (int j = 0; j < t_len; ++j) {
                    double s = 0.0;
                    for (int m = 0; m < dk; ++m)
                        s += c.q.at(i, off + m) * c.k.at(j, off + m);
                    logits[j] = s * scale;
                    mx = std::max(mx, logits[j]);
                }
                double sum = 0.0;
                for (int j = 0; j < t_len; ++j) sum += std::exp(logits[j] - mx);
                for (int j = 0; j < t_len; ++j)
                    alpha.at(i, j) = std::exp(logits[j] - mx) / sum;
                for (int m = 0; m < dk; ++m) {
                    double a = 0.0;
                    for (int j = 0; j < t_len; ++j)
                        a += alpha.at(i, j) * c.vproj.at(j, off + m);
                    c.ctx.at(i, off + m) = a;
                }
            }
            c.attention.push_back(std::move(alpha));
        }
        for (int t = 0; t < t_len; ++t) {
            for (int j = 0; j < h; ++j) {
                double a = bo.v[j];
                for (int i = 0; i < h; ++i) a += wo.at(j, i) * c.ctx.at(t, i);
                c.hidden.at(t, j) = std::tanh(a);
            }
        }
    }

    if (training && cfg.dropout_rate > 0.0) {
        c.drop_h = make_dropout_mask(c.hidden.size(), cfg.dropout_rate, *rng);
        for (std::size_t i = 0; i < c.hidden.size(); ++i) c.hidden.v[i] *= c.drop_h[i];
    }

    const Tensor& ew = p.tensor("emit.w");
    const Tensor& eb = p.tensor("emit.b");
    c.emissions = Tensor::zeros(t_len, L);
    for (int t = 0; t < t_len; ++t)
        for (int y = 0; y < L; ++y) {
            double a = eb.v[y];
            for (int i = 0; i < h; ++i) a += ew.at(y, i) * c.hidden.at(t, i);
            c.emissions.at(t, y) = a;
        }
}

}  // namespace

EncodeCache encode(const LabelerParams& p, const std::vector<int>& token_ids,
                   bool training, std::mt19937_64* rng) {
    if (token_ids.empty()) throw invalid_error("cannot encode an empty sequence");
    EncodeCache c;
    c.tokens = token_ids;
    const Tensor& embed = p.tensor("embed");
    c.x = Tensor::zeros(static_cast<int>(token_ids.size()), p.config.embed_dim);
    for (std::size_t t = 0; t < token_ids.size(); ++t) {
        int id = token_ids[t];
        if (id < 0 || id >= p.config.vocab_size) id = kUnkIndex;
        for (int i = 0; i < p.config.embed_dim; ++i)
            c.x.at(static_cast<int>(t), i) = embed.at(id, i);
    }
    encode_from_x(p, c, training, rng);
    return c;
}

EncodeCache encode_embedded(const LabelerParams& p, const Tensor& x) {
    if (x.rows < 1 || x.cols != p.config.embed_dim)
        throw invalid_error("input embeddings must be T x embed_dim");
    EncodeCache c;
    c.x = x;
    encode_from_x(p, c, false, nullptr);
    return c;
}

// ---------------------------------------------------------------------------
// Backward pass

void encoder_backward(const LabelerParams& p, const EncodeCache& c,
                      const Tensor& demissions, Gradients* grads, Tensor* dx_out) {
    const int t_len = c.x.rows;
    const int h = p.config.hidden_dim;
    const Tensor& ew = p.tensor("emit.w");

    // emission projection
    Tensor dhidden = Tensor::zeros(t_len, h);
    for (int t = 0; t < t_len; ++t)
        for (int y = 0; y < L; ++y) {
            double g = demissions.at(t, y);
            if (grads) {
                Tensor& gw = grads->at("emit.w");
                for (int i = 0; i < h; ++i) gw.at(y, i) += g * c.hidden.at(t, i);
                grads->at("emit.b").v[y] += g;
            }
            for (int i = 0; i < h; ++i) dhidden.at(t, i) += g * ew.at(y, i);
        }
    encoder_backward_hidden(p, c, dhidden, grads, dx_out);
}

void encoder_backward_hidden(const LabelerParams& p, const EncodeCache& c,
                             const Tensor& dhidden_in, Gradients* grads,
                             Tensor* dx_out) {
    const EncoderConfig& cfg = p.config;
    const int t_len = c.x.rows;
    const int d = cfg.embed_dim, h = cfg.hidden_dim;

    auto gtensor = [&](const std::string& name) -> Tensor* {
        if (!grads) return nullptr;
        auto it = grads->find(name);
        if (it == grads->end()) throw invalid_error("gradient tensor missing: " + name);
        return &it->second;
    };

    Tensor dhidden = dhidden_in;
    if (!c.drop_h.empty())
        for (std::size_t i = 0; i < dhidden.size(); ++i) dhidden.v[i] *= c.drop_h[i];

    Tensor dx = Tensor::zeros(t_len, d);

    if (cfg.kind == EncoderKind::EmbedBiRecurrent) {
        const int dh = h / 2;
        const Tensor& wxf = p.tensor("rnn.wxf");
        const Tensor& whf = p.tensor("rnn.whf");
        const Tensor& wxb = p.tensor("rnn.wxb");
        const Tensor& whb = p.tensor("rnn.whb");
        Tensor* gwxf = gtensor("rnn.wxf");
        Tensor* gwhf = gtensor("rnn.whf");
        Tensor* gbf = gtensor("rnn.bf");
        Tensor* gwxb = gtensor("rnn.wxb");
        Tensor* gwhb = gtensor("rnn.whb");
        Tensor* gbb = gtensor("rnn.bb");

        // forward direction, reversed in time
        std::vector<double> carry(dh, 0.0);
        for (int t = t_len - 1; t >= 0; --t) {
            std::vector<double> delta(dh);
            for (int j = 0; j < dh; ++j) {
                double g = dhidden.at(t, j) + carry[j];
                double hv = c.hf.at(t, j);
                delta[j] = g * (1.0 - hv * hv);
            }
            for (int j = 0; j < dh; ++j) {
                if (gbf) gbf->v[j] += delta[j];
                if (gwxf)
                    for (int i = 0; i < d; ++i) gwxf->at(j, i) += delta[j] * c.x.at(t, i);
                if (t > 0 && gwhf)
                    for (int i = 0; i < dh; ++i)
                        gwhf->at(j, i) += delta[j] * c.hf.at(t - 1, i);
                for (int i = 0; i < d; ++i) dx.at(t, i) += wxf.at(j, i) * delta[j];
            }
            std::fill(carry.begin(), carry.end(), 0.0);
            if (t > 0)
                for (int i = 0; i < dh; ++i)
                    for (int j = 0; j < dh; ++j) carry[i] += whf.at(j, i) * delta[j];
        }
        // backward direction, forward in time
        std::fill(carry.begin(), carry.end(), 0.0);
        for (int t = 0; t < t_len; ++t) {
            std::vector<double> delta(dh);
            for (int j = 0; j < dh; ++j) {
                double g = dhidden.at(t, dh + j) + carry[j];
                double hv = c.hb.at(t, j);
                delta[j] = g * (1.0 - hv * hv);
            }
            for (int j = 0; j < dh; ++j) {
                if (gbb) gbb->v[j] += delta[j];
                if (gwxb)
                    for (int i = 0; i < d; ++i) gwxb->at(j, i) += delta[j] * c.x.at(t, i);
                if (t + 1 < t_len && gwhb)
                    for (int i = 0; i < dh; ++i)
                        gwhb->at(j, i) += delta[j] * c.hb.at(t + 1, i);
                for (int i = 0; i < d; ++i) dx.at(t, i) += wxb.at(j, i) * delta[j];
            }
            std::fill(carry.begin(), carry.end(), 0.0);
            if (t + 1 < t_len)
                for (int i = 0; i < dh; ++i)
                    for (int j = 0; j < dh; ++j) carry[i] += whb.at(j, i) * delta[j];
        }
    } else {
        const int heads = cfg.attention_heads;
        const int dk = h / heads;
        const double scale = 1.0 / std::sqrt(static_cast<double>(dk));
        const Tensor& wq = p.tensor("attn.wq");
        const Tensor& wk = p.tensor("attn.wk");
        const Tensor& wv = p.tensor("attn.wv");
        const Tensor& wo = p.tensor("attn.wo");

        Tensor dctx = Tensor::zeros(t_len, h);
        for (int t = 0; t < t_len; ++t) {
            for (int j = 0; j < h; ++j) {
                double hv = c.hidden.at(t, j);
                if (!c.drop_h.empty()) {
                    // dhidden already carries the mask; recover pre-dropout h
                    double m = c.drop_h[static_cast<std::size_t>(t) * h + j];
                    hv = m != 0.0 ? hv / m : 0.0;
                }
                double do_ = dhidden.at(t, j) * (1.0 - hv * hv);
                if (Tensor* gbo = gtensor("attn.bo")) gbo->v[j] += do_;
                if (Tensor* gwo = gtensor("attn.wo"))
                    for (int i = 0; i < h; ++i) gwo->at(j, i) += do_ * c.ctx.at(t, i);
                for (int i = 0; i < h; ++i) dctx.at(t, i) += wo.at(j, i) * do_;
            }
        }

        Tensor dq = Tensor::zeros(t_len, h), dkk = Tensor::zeros(t_len, h),
               dv = Tensor::zeros(t_len, h);
        for (int head = 0; head < heads; ++head) {
            const int off = head * dk;
            const Tensor& alpha = c.attention[head];
            for (int i = 0; i < t_len; ++i) {
                // d alpha
                std::vector<double> dalpha(t_len, 0.0);
                for (int j = 0; j < t_len; ++j) {
                    double a = 0.0;
                    for (int m = 0; m < dk; ++m)
                        a += dctx.at(i, off + m) * c.vproj.at(j, off + m);
                    dalpha[j] = a;
                    for (int m = 0; m < dk; ++m)
                        dv.at(j, off + m) += alpha.at(i, j) * dctx.at(i, off + m);
                }
                // softmax jacobian
                double dot = 0.0;
                for (int j = 0; j < t_len; ++j) dot += alpha.at(i, j) * dalpha[j];
                for (int j = 0; j < t_len; ++j) {
                    double de = alpha.at(i, j) * (dalpha[j] - dot) * scale;
                    for (int m = 0; m < dk; ++m) {
                        dq.at(i, off + m) += de * c.k.at(j, off + m);
                        dkk.at(j, off + m) += de * c.q.at(i, off + m);
                    }
                }
            }
        }
        auto unproject = [&](const Tensor& w, const Tensor& dproj, Tensor* gw) {
            for (int t = 0; t < t_len; ++t)
                for (int j = 0; j < h; ++j) {
                    double g = dproj.at(t, j);
                    if (g == 0.0) continue;
                    if (gw)
                        for (int i = 0; i < d; ++i) gw->at(j, i) += g * c.x.at(t, i);
                    for (int i = 0; i < d; ++i) dx.at(t, i) += w.at(j, i) * g;
                }
        };
        unproject(wq, dq, gtensor("attn.wq"));
        unproject(wk, dkk, gtensor("attn.wk"));
        unproject(wv, dv, gtensor("attn.wv"));
    }

    if (!c.drop_x.empty())
        for (std::size_t i = 0; i < dx.size(); ++i) dx.v[i] *= c.drop_x[i];

    if (grads && !c.tokens.empty()) {
        Tensor* gembed = gtensor("embed");
        for (std::size_t t = 0; t < c.tokens.size(); ++t) {
            int id = c.tokens[t];
            if (id < 0 || id >= cfg.vocab_size) id = kUnkIndex;
            for (int i = 0; i < d; ++i)
                gembed->at(id, i) += dx.at(static_cast<int>(t), i);
        }
    }
    if (dx_out) *dx_out = std::move(dx);
}

Gradients zero_gradients(const LabelerParams& p) {
    Gradients g;
    for (const auto& [name, t] : p.tensors) g[name] = Tensor::zeros(t.rows, t.cols);
    return g;
}

double loss_and_gradients(const LabelerParams& p, const std::vector<int>& token_ids,
                          const std::vector<BioLabel>& gold, const LossConfig& cfg,
                          Gradients* grads, double scale, bool training,
                          std::mt19937_64* rng) {
    EncodeCache cache = encode(p, token_ids, training, rng);
    Tensor demissions;
    double loss;
    if (cfg.kind == LossKind::CrfNll) {
        CrfParams crf = crf_from_params(p, cfg.constrain_bio);
        CrfGrad cg;
        loss = crf_nll_grad(cache.emissions, crf, gold, &cg);
        demissions = std::move(cg.demissions);
        if (grads) {
            Tensor& gt = grads->at("crf.trans");
            for (int i = 0; i < L * L; ++i) gt.v[i] += scale * cg.dtrans[i];
            Tensor& gs = grads->at("crf.start");
            Tensor& ge = grads->at("crf.stop");
            for (int i = 0; i < L; ++i) {
                gs.v[i] += scale * cg.dstart[i];
                ge.v[i] += scale * cg.dstop[i];
            }
        }
    } else if (cfg.kind == LossKind::SoftmaxNllWeighted) {
        loss = softmax_nll(cache.emissions, gold, cfg, &demissions);
    } else {
        loss = focal_loss(cache.emissions, gold, cfg, &demissions);
    }
    if (!std::isfinite(loss)) throw invalid_error("non-finite loss");
    if (scale != 1.0)
        for (auto& x : demissions.v) x *= scale;
    encoder_backward(p, cache, demissions, grads, nullptr);
    if (grads) check_grad_finite(*grads);
    return loss;
}

TagSequence predict(const LabelerParams& p, const std::vector<int>& token_ids,
                    const LossConfig& cfg) {
    EncodeCache cache = encode(p, token_ids);
    if (cfg.kind == LossKind::CrfNll) {
        CrfParams crf = crf_from_params(p, cfg.constrain_bio);
        return viterbi_decode(cache.emissions, crf);
    }
    return argmax_decode(cache.emissions);
}

double toxicity_score(const LabelerParams& p, const Tensor& x, const LossConfig& cfg,
                      Tensor* dx) {
    EncodeCache cache = encode_embedded(p, x);
    const int t_len = x.rows;
    double f;
    Tensor demissions;
    if (cfg.kind == LossKind::CrfNll) {
        CrfParams crf = crf_from_params(p, cfg.constrain_bio);
        f = crf_toxic_marginal_mean(cache.emissions, crf, dx ? &demissions : nullptr);
    } else {
        // mean toxic softmax mass
        f = 0.0;
        if (dx) demissions = Tensor::zeros(t_len, L);
        for (int t = 0; t < t_len; ++t) {
            double row[L] = {cache.emissions.at(t, 0), cache.emissions.at(t, 1),
                             cache.emissions.at(t, 2)};
            double mx = std::max({row[0], row[1], row[2]});
            double z = 0.0;
            for (int c = 0; c < L; ++c) z += std::exp(row[c] - mx);
            double pb = std::exp(row[1] - mx) / z;
            double pi = std::exp(row[2] - mx) / z;
            double ptox = pb + pi;
            f += ptox;
            if (dx) {
                double po = std::exp(row[0] - mx) / z;
                double ps[L] = {po, pb, pi};
                for (int c = 0; c < L; ++c) {
                    double in_set = c != 0 ? 1.0 : 0.0;
                    demissions.at(t, c) = ps[c] * (in_set - ptox) / static_cast<double>(t_len);
                }
            }
        }
        f /= static_cast<double>(t_len);
    }
    if (dx) encoder_backward(p, cache, demissions, nullptr, dx);
    return f;
}

}  // namespace spanlab
