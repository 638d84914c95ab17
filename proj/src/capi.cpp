#include "spanlab/spanlab.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "spanlab/agreement.hpp"
#include "spanlab/augment.hpp"
#include "spanlab/config.hpp"
#include "spanlab/corpus.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/explain.hpp"
#include "spanlab/metrics.hpp"
#include "spanlab/synth.hpp"
#include "spanlab/trainer.hpp"
#include "spanlab/unicode.hpp"

using namespace spanlab;

struct sl_config {
    Config cfg;
};
struct sl_corpus {
    Corpus corpus;
};
struct sl_model {
    LabelerParams params;
};

namespace {

thread_local std::string g_last_error;

sl_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::Io: return SL_ERR_IO;
        case ErrorKind::Parse: return SL_ERR_PARSE;
        case ErrorKind::Config: return SL_ERR_CONFIG;
        case ErrorKind::Invalid: return SL_ERR_INVALID;
        case ErrorKind::Unsupported: return SL_ERR_UNSUPPORTED;
        case ErrorKind::NotImplemented: return SL_ERR_NOT_IMPLEMENTED;
        case ErrorKind::Internal: return SL_ERR_INTERNAL;
    }
    return SL_ERR_INTERNAL;
}

template <typename Fn>
sl_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw invalid_error(std::string("null argument: ") + what);
}

// --- typed configs from the flat key-value view ---------------------------

EncoderConfig encoder_from(const Config& c) {
    EncoderConfig e;
    std::string kind = c.get_or("encoder.kind", "recurrent");
    if (kind == "recurrent") e.kind = EncoderKind::EmbedBiRecurrent;
    else if (kind == "attention") e.kind = EncoderKind::EmbedSelfAttention;
    else throw config_error("encoder.kind must be 'recurrent' or 'attention'");
    e.vocab_size = static_cast<int>(c.get_int("encoder.vocab_size"));
    e.embed_dim = static_cast<int>(c.get_int("encoder.embed_dim"));
    e.hidden_dim = static_cast<int>(c.get_int("encoder.hidden_dim"));
    e.attention_heads = static_cast<int>(c.get_int("encoder.attention_heads"));
    e.dropout_rate = c.get_double("encoder.dropout");
    e.seed = static_cast<std::uint64_t>(c.get_int("seed"));
    return e;
}

LossConfig loss_from(const Config& c) {
    LossConfig l;
    std::string kind = c.get_or("loss.kind", "crf");
    if (kind == "crf") l.kind = LossKind::CrfNll;
    else if (kind == "weighted") l.kind = LossKind::SoftmaxNllWeighted;
    else if (kind == "focal") l.kind = LossKind::FocalLoss;
    else throw config_error("loss.kind must be 'crf', 'weighted', or 'focal'");
    l.gamma = c.get_double("loss.gamma");
    l.derived_weights = c.get_bool("loss.derived_weights");
    auto w = c.get_double_list("loss.weights");
    if (w.size() != 3) throw config_error("loss.weights needs three values");
    l.weights = {w[0], w[1], w[2]};
    l.constrain_bio = c.get_bool("loss.constrain_bio");
    return l;
}

TrainConfig train_from(const Config& c) {
    TrainConfig t;
    t.lr_grid = c.get_double_list("train.lr_grid");
    t.dropout_grid = c.get_double_list("train.dropout_grid");
    t.batch_grid.clear();
    for (double b : c.get_double_list("train.batch_grid"))
        t.batch_grid.push_back(static_cast<int>(b));
    t.lr = c.get_double("train.lr");
    t.batch_size = static_cast<int>(c.get_int("train.batch_size"));
    t.dropout = c.get_double(c.has("train.dropout") ? "train.dropout" : "encoder.dropout");
    t.max_epochs = static_cast<int>(c.get_int("train.max_epochs"));
    t.patience = static_cast<int>(c.get_int("train.patience"));
    t.momentum = c.get_double("train.momentum");
    t.clip_norm = c.get_double("train.clip_norm");
    t.domain_weighting = c.get_bool("train.domain_weighting");
    t.seed = static_cast<std::uint64_t>(c.get_int("seed"));
    if (c.has("train.single_domain"))
        t.single_domain = domain_from_string(c.get("train.single_domain"));
    return t;
}

SplitSpec split_from(const Config& c) {
    SplitSpec s;
    s.train_frac = c.get_double("split.train");
    s.dev_frac = c.get_double("split.dev");
    s.test_frac = c.get_double("split.test");
    std::string strat = c.get_or("split.stratify", "domain_toxicity");
    s.stratify_domain = strat == "domain" || strat == "domain_toxicity";
    s.stratify_toxicity = strat == "toxicity" || strat == "domain_toxicity";
    s.seed = static_cast<std::uint64_t>(c.get_int("seed"));
    return s;
}

AugmentConfig augment_from(const Config& c) {
    AugmentConfig a;
    a.synonym.enabled = c.get_bool("augment.synonym.enabled");
    a.synonym.replace_frac_lo = c.get_double("augment.synonym.replace_frac_lo");
    a.synonym.replace_frac_hi = c.get_double("augment.synonym.replace_frac_hi");
    a.synonym.dictionary_path = c.get_or("augment.synonym.dict", "");
    a.masking.enabled = c.get_bool("augment.mask.enabled");
    a.masking.mask_prob = c.get_double("augment.mask.prob");
    a.masking.mask_token = c.get_or("augment.mask.token", "<MASK>");
    a.codeswitch.enabled = c.get_bool("augment.codeswitch.enabled");
    a.codeswitch.sample_frac = c.get_double("augment.codeswitch.sample_frac");
    a.codeswitch.word_frac_lo = c.get_double("augment.codeswitch.word_frac_lo");
    a.codeswitch.word_frac_hi = c.get_double("augment.codeswitch.word_frac_hi");
    a.codeswitch.dictionary_path = c.get_or("augment.codeswitch.dict", "");
    a.seed = static_cast<std::uint64_t>(c.get_int("seed"));
    return a;
}

SynthConfig synth_from(const Config& c) {
    SynthConfig s;
    s.seed = static_cast<std::uint64_t>(c.get_int("seed"));
    s.n_posts = static_cast<int>(c.get_int("synth.posts"));
    s.lexicon_size = static_cast<int>(c.get_int("synth.lexicon_size"));
    s.n_domains = static_cast<int>(c.get_list("synth.domains").size());
    if (c.has("synth.toxic_frac")) s.toxic_frac = c.get_double("synth.toxic_frac");
    if (c.has("synth.multi_span_frac"))
        s.multi_span_frac = c.get_double("synth.multi_span_frac");
    if (c.has("synth.disjoint_lexicons"))
        s.disjoint_lexicons = c.get_bool("synth.disjoint_lexicons");
    return s;
}

std::vector<TagSequence> predict_corpus(const LabelerParams& p, const Corpus& corpus,
                                        const LossConfig& loss) {
    std::vector<TagSequence> preds;
    preds.reserve(corpus.posts.size());
    for (const auto& post : corpus.posts) {
        if (post.tokens.empty()) {
            preds.push_back({});
            continue;
        }
        preds.push_back(predict(p, tokens_to_ids(p, post.tokens), loss));
    }
    return preds;
}

}  // namespace

extern "C" {

const char* sl_last_error(void) { return g_last_error.c_str(); }

void sl_string_free(char* s) { std::free(s); }

sl_status sl_config_create(sl_config** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sl_config{Config::defaults()};
    });
}

sl_status sl_config_load_file(sl_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg, "cfg");
        require(path, "path");
        cfg->cfg.merge(Config::from_file(path));
    });
}

sl_status sl_config_set(sl_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        require(cfg, "cfg");
        require(key, "key");
        require(value, "value");
        cfg->cfg.set(key, value);
    });
}

sl_status sl_config_dump(const sl_config* cfg, char** out) {
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = dup_string(cfg->cfg.to_string());
    });
}

void sl_config_free(sl_config* cfg) { delete cfg; }

sl_status sl_corpus_load(const char* path, sl_corpus** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new sl_corpus{load_corpus(path)};
    });
}

sl_status sl_corpus_save(const sl_corpus* corpus, const char* path) {
    return guarded([&] {
        require(corpus, "corpus");
        require(path, "path");
        save_corpus(corpus->corpus, path);
    });
}

sl_status sl_corpus_size(const sl_corpus* corpus, size_t* out) {
    return guarded([&] {
        require(corpus, "corpus");
        require(out, "out");
        *out = corpus->corpus.size();
    });
}

void sl_corpus_free(sl_corpus* corpus) { delete corpus; }

sl_status sl_model_load(const char* path, sl_model** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new sl_model{load_params(path)};
    });
}

sl_status sl_model_save(const sl_model* model, const char* path) {
    return guarded([&] {
        require(model, "model");
        require(path, "path");
        save_params(model->params, path);
    });
}

void sl_model_free(sl_model* model) { delete model; }

sl_status sl_preprocess(const sl_config* cfg, const char* input_jsonl,
                        const char* output_corpus, char** summary) {
    return guarded([&] {
        require(cfg, "cfg");
        require(input_jsonl, "input");
        require(output_corpus, "output");
        const Config& c = cfg->cfg;
        std::vector<RawText> raw = load_raw_jsonl(input_jsonl);
        std::size_t before = raw.size();
        raw = dedup(raw, c.get_double("pipeline.dedup_threshold"));
        PipelineConfig pipe = PipelineConfig::from_config(c);
        Corpus out;
        for (const auto& r : raw) {
            NormalizedText norm = normalize(r, pipe);
            Post post;
            post.id = r.source_id;
            post.domain = r.domain;
            post.normalized_text = unicode::encode_utf8(norm.text);
            post.tokens = tokenize(norm.text);
            out.posts.push_back(std::move(post));
        }
        save_corpus(out, output_corpus);
        if (summary) {
            std::ostringstream s;
            s << "preprocess: " << before << " raw posts, " << raw.size()
              << " after dedup -> " << output_corpus;
            *summary = dup_string(s.str());
        }
    });
}

sl_status sl_stats(const sl_corpus* corpus, char** report) {
    return guarded([&] {
        require(corpus, "corpus");
        require(report, "report");
        *report = dup_string(stats_to_string(compute_stats(corpus->corpus)));
    });
}

sl_status sl_agreement(const sl_corpus* corpus, char** report) {
    return guarded([&] {
        require(corpus, "corpus");
        require(report, "report");
        *report = dup_string(agreement_to_string(corpus_agreement(corpus->corpus)));
    });
}

sl_status sl_split(const sl_corpus* corpus, const sl_config* cfg,
                   const char* output_prefix, char** summary) {
    return guarded([&] {
        require(corpus, "corpus");
        require(cfg, "cfg");
        require(output_prefix, "output_prefix");
        SplitResult r = stratified_split(corpus->corpus, split_from(cfg->cfg));
        std::string prefix(output_prefix);
        save_corpus(r.train, prefix + ".train");
        save_corpus(r.dev, prefix + ".dev");
        save_corpus(r.test, prefix + ".test");
        if (summary) {
            std::ostringstream s;
            s << "split: train=" << r.train.size() << " dev=" << r.dev.size()
              << " test=" << r.test.size() << " -> " << prefix << ".{train,dev,test}";
            *summary = dup_string(s.str());
        }
    });
}

sl_status sl_train(const sl_corpus* train_set, const sl_corpus* dev_set,
                   const sl_config* cfg, const char* model_out, char** log) {
    return guarded([&] {
        require(train_set, "train_set");
        require(dev_set, "dev_set");
        require(cfg, "cfg");
        require(model_out, "model_out");
        const Config& c = cfg->cfg;
        TrainResult r = train(train_set->corpus, dev_set->corpus, train_from(c),
                              loss_from(c), encoder_from(c));
        save_params(r.params, model_out);
        if (log) *log = dup_string(train_log_to_string(r.log));
    });
}

sl_status sl_grid(const sl_corpus* train_set, const sl_corpus* dev_set,
                  const sl_config* cfg, char** table) {
    return guarded([&] {
        require(train_set, "train_set");
        require(dev_set, "dev_set");
        require(cfg, "cfg");
        require(table, "table");
        const Config& c = cfg->cfg;
        GridResult g = grid_search(train_set->corpus, dev_set->corpus, train_from(c),
                                   loss_from(c), encoder_from(c));
        *table = dup_string(grid_to_string(g));
    });
}

sl_status sl_eval(const sl_model* model, const sl_corpus* corpus,
                  const sl_config* cfg, char** report) {
    return guarded([&] {
        require(model, "model");
        require(corpus, "corpus");
        require(cfg, "cfg");
        require(report, "report");
        LossConfig loss = loss_from(cfg->cfg);
        std::vector<TagSequence> preds = predict_corpus(model->params, corpus->corpus, loss);
        std::ostringstream s;
        s << eval_to_string(evaluate(corpus->corpus, preds));
        for (const auto& [name, rep] : breakdown(corpus->corpus, preds, GroupBy::Domain))
            s << "domain." << name << ".token_f1=" << rep.token.f1 << '\n'
              << "domain." << name << ".span_f1=" << rep.span.f1 << '\n';
        *report = dup_string(s.str());
    });
}

sl_status sl_crossdomain(const sl_corpus* train_set, const sl_corpus* test_set,
                         const sl_config* cfg, char** matrix) {
    return guarded([&] {
        require(train_set, "train_set");
        require(test_set, "test_set");
        require(cfg, "cfg");
        require(matrix, "matrix");
        const Config& c = cfg->cfg;
        CrossDomainResult m = cross_domain_eval(train_set->corpus, test_set->corpus,
                                                train_from(c), loss_from(c),
                                                encoder_from(c));
        *matrix = dup_string(cross_domain_to_string(m));
    });
}

sl_status sl_predict(const sl_model* model, const sl_corpus* corpus,
                     const sl_config* cfg, const char* output_corpus,
                     char** summary) {
    return guarded([&] {
        require(model, "model");
        require(corpus, "corpus");
        require(cfg, "cfg");
        require(output_corpus, "output");
        LossConfig loss = loss_from(cfg->cfg);
        Corpus out = corpus->corpus;
        std::vector<TagSequence> preds = predict_corpus(model->params, out, loss);
        for (std::size_t i = 0; i < out.posts.size(); ++i) {
            out.posts[i].gold = preds[i];
            out.posts[i].annotator_labels.clear();
        }
        save_corpus(out, output_corpus);
        if (summary) {
            std::ostringstream s;
            s << "predict: " << out.size() << " posts -> " << output_corpus;
            *summary = dup_string(s.str());
        }
    });
}

sl_status sl_explain(const sl_model* model, const sl_corpus* corpus,
                     const sl_config* cfg, const char* mode, const char* format,
                     char** report) {
    return guarded([&] {
        require(model, "model");
        require(corpus, "corpus");
        require(cfg, "cfg");
        require(mode, "mode");
        require(format, "format");
        require(report, "report");
        const Config& c = cfg->cfg;
        std::string fmt(format), md(mode);
        HighlightFormat hf;
        if (fmt == "ansi") hf = HighlightFormat::Ansi;
        else if (fmt == "html") hf = HighlightFormat::Html;
        else throw config_error("explain format must be 'ansi' or 'html'");
        LossConfig loss = loss_from(c);
        std::ostringstream out;
        for (const auto& post : corpus->corpus.posts) {
            if (post.tokens.empty()) continue;
            std::vector<int> ids = tokens_to_ids(model->params, post.tokens);
            if (md == "ig") {
                AttributionMap attr = integrated_gradients(
                    model->params, ids, loss,
                    static_cast<int>(c.get_int("explain.ig_steps")));
                out << render_highlights(post, attr, hf);
            } else if (md == "attention") {
                std::vector<int> sel = attention_indicators(
                    model->params, ids, c.get_double("explain.attention_threshold"));
                TagSequence tags;
                tags.labels.assign(post.tokens.size(), BioLabel::O);
                for (std::size_t i = 0; i < sel.size(); ++i) {
                    int j = sel[i];
                    bool prev = i > 0 && sel[i - 1] == j - 1;
                    tags.labels[j] = prev ? BioLabel::I_TOXIC : BioLabel::B_TOXIC;
                }
                out << render_highlights(post, tags, hf);
            } else if (md == "spans") {
                out << render_highlights(post, predict(model->params, ids, loss), hf);
            } else {
                throw config_error("explain mode must be 'ig', 'attention', or 'spans'");
            }
        }
        *report = dup_string(out.str());
    });
}

sl_status sl_augment(const sl_corpus* corpus, const sl_config* cfg,
                     const char* output_corpus, char** summary) {
    return guarded([&] {
        require(corpus, "corpus");
        require(cfg, "cfg");
        require(output_corpus, "output");
        Corpus out = augment_corpus(corpus->corpus, augment_from(cfg->cfg));
        save_corpus(out, output_corpus);
        if (summary) {
            std::ostringstream s;
            s << "augment: " << out.size() << " posts -> " << output_corpus;
            *summary = dup_string(s.str());
        }
    });
}

sl_status sl_synth(const sl_config* cfg, const char* output_corpus, char** summary) {
    return guarded([&] {
        require(cfg, "cfg");
        require(output_corpus, "output");
        Corpus out = synth_corpus(synth_from(cfg->cfg));
        save_corpus(out, output_corpus);
        if (summary) {
            std::ostringstream s;
            s << "synth: " << out.size() << " posts -> " << output_corpus;
            *summary = dup_string(s.str());
        }
    });
}

}  // extern "C"
