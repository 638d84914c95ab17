#include "spanlab/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/metrics.hpp"

namespace spanlab {

void TrainConfig::validate() const {
    if (lr_grid.empty() || batch_grid.empty() || dropout_grid.empty())
        throw config_error("hyperparameter grids must be non-empty");
    if (patience < 1) throw config_error("patience must be >= 1");
    if (max_epochs < 1) throw config_error("max_epochs must be >= 1");
    if (batch_size < 1) throw config_error("batch_size must be >= 1");
    if (lr < 0.0) throw config_error("learning rate must be >= 0");
    if (dropout < 0.0 || dropout >= 1.0) throw config_error("dropout must be in [0, 1)");
    if (clip_norm <= 0.0) throw config_error("clip_norm must be positive");
}

DomainWeights domain_weights(const std::map<Domain, std::size_t>& counts) {
    if (counts.empty()) throw invalid_error("no domains to weight");
    DomainWeights dw;
    double z = 0.0;
    for (const auto& [d, n] : counts) {
        if (n == 0) throw invalid_error("empty domain: " + domain_to_string(d));
        z += 1.0 / static_cast<double>(n);
    }
    for (const auto& [d, n] : counts)
        dw.w[d] = (1.0 / static_cast<double>(n)) / z;
    return dw;
}

std::vector<Batch> balanced_batches(const Corpus& corpus, int batch_size,
                                    std::uint64_t seed) {
    if (batch_size < 1) throw invalid_error("batch_size must be >= 1");
    std::map<Domain, std::vector<std::size_t>> by_domain;
    for (std::size_t i = 0; i < corpus.posts.size(); ++i)
        by_domain[corpus.posts[i].domain].push_back(i);
    if (by_domain.empty()) throw invalid_error("empty corpus");

    std::mt19937_64 rng(seed);
    // Per-domain shuffled cycles; exhausted cycles reshuffle (small domains
    // effectively resample with replacement).
    struct Cycle {
        std::vector<std::size_t> order;
        std::size_t pos = 0;
    };
    std::map<Domain, Cycle> cycles;
    for (auto& [d, idx] : by_domain) {
        Cycle c;
        c.order = idx;
        std::shuffle(c.order.begin(), c.order.end(), rng);
        cycles[d] = std::move(c);
    }
    auto draw = [&](Domain d) {
        Cycle& c = cycles[d];
        if (c.pos >= c.order.size()) {
            std::shuffle(c.order.begin(), c.order.end(), rng);
            c.pos = 0;
        }
        return c.order[c.pos++];
    };

    const int n_dom = static_cast<int>(by_domain.size());
    std::vector<Domain> domains;
    for (const auto& [d, _] : by_domain) domains.push_back(d);

    const std::size_t total = corpus.posts.size();
    const std::size_t n_batches = (total + batch_size - 1) / batch_size;
    std::vector<Batch> out;
    out.reserve(n_batches);
    for (std::size_t b = 0; b < n_batches; ++b) {
        Batch batch;
        const int base = batch_size / n_dom;
        const int extra = batch_size % n_dom;
        for (int k = 0; k < n_dom; ++k) {
            // leftover slots rotate across batches so epoch totals stay uniform
            int quota = base + ((k + static_cast<int>(b)) % n_dom < extra ? 1 : 0);
            Domain d = domains[k];
            for (int j = 0; j < quota; ++j) batch.push_back(draw(d));
        }
        out.push_back(std::move(batch));
    }
    return out;
}

std::vector<std::string> build_vocab(const Corpus& corpus) {
    std::vector<std::string> vocab{"<UNK>", "<MASK>"};
    std::unordered_set<std::string> seen(vocab.begin(), vocab.end());
    for (const auto& post : corpus.posts)
        for (const auto& tok : post.tokens)
            if (seen.insert(tok.surface).second) vocab.push_back(tok.surface);
    return vocab;
}

namespace {

Corpus filter_domain(const Corpus& corpus, Domain d) {
    Corpus out;
    for (const auto& post : corpus.posts)
        if (post.domain == d) out.posts.push_back(post);
    return out;
}

std::map<Domain, std::size_t> domain_counts(const Corpus& corpus) {
    std::map<Domain, std::size_t> counts;
    for (const auto& post : corpus.posts) ++counts[post.domain];
    return counts;
}

double clip_gradients(Gradients& g, double max_norm) {
    double sq = 0.0;
    for (const auto& [_, t] : g)
        for (double x : t.v) sq += x * x;
    double norm = std::sqrt(sq);
    if (norm > max_norm && norm > 0.0) {
        double s = max_norm / norm;
        for (auto& [_, t] : g)
            for (auto& x : t.v) x *= s;
    }
    return norm;
}

}  // namespace

double model_token_f1(const LabelerParams& p, const Corpus& corpus,
                      const LossConfig& loss_cfg) {
    std::vector<TagSequence> preds, golds;
    for (const auto& post : corpus.posts) {
        if (!post.gold || post.tokens.empty()) continue;
        preds.push_back(predict(p, tokens_to_ids(p, post.tokens), loss_cfg));
        golds.push_back(*post.gold);
    }
    if (preds.empty()) return 0.0;
    return token_prf(preds, golds).f1;
}

TrainResult train(const Corpus& train_in, const Corpus& dev_set,
                  const TrainConfig& cfg, const LossConfig& loss_in,
                  const EncoderConfig& encoder_in) {
    cfg.validate();
    Corpus train_set =
        cfg.single_domain ? filter_domain(train_in, *cfg.single_domain) : train_in;
    if (train_set.posts.empty()) throw invalid_error("empty training set");

    LossConfig loss_cfg = loss_in;
    if (loss_cfg.derived_weights && loss_cfg.kind != LossKind::CrfNll) {
        std::size_t n[3] = {0, 0, 0};
        for (const auto& post : train_set.posts)
            if (post.gold)
                for (BioLabel l : post.gold->labels) ++n[static_cast<int>(l)];
        loss_cfg.weights = class_weights(n[0], n[1], n[2]);
    }
    loss_cfg.validate();

    EncoderConfig enc = encoder_in;
    enc.dropout_rate = cfg.dropout;
    enc.seed = derive_seed(cfg.seed, "init");
    std::vector<std::string> vocab = build_vocab(train_set);
    enc.vocab_size = static_cast<int>(vocab.size());
    LabelerParams params = init_params(enc, vocab);

    DomainWeights dw = domain_weights(domain_counts(train_set));
    const double n_dom = static_cast<double>(dw.w.size());

    Gradients velocity = zero_gradients(params);
    std::mt19937_64 drop_rng(derive_seed(cfg.seed, "dropout"));

    TrainResult result;
    result.params = params;  // epoch-0 fallback checkpoint
    TrainLog& log = result.log;
    int since_best = 0;

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        auto batches = balanced_batches(train_set, cfg.batch_size,
                                        derive_seed(cfg.seed, "batches") + epoch);
        double epoch_loss = 0.0;
        bool failed = false;
        for (const Batch& batch : batches) {
            Gradients grads = zero_gradients(params);
            double batch_loss = 0.0;
            try {
                for (std::size_t idx : batch) {
                    const Post& post = train_set.posts[idx];
                    if (!post.gold || post.tokens.empty()) continue;
                    // Alg. 1's domain-weighted loss; a single domain gets weight 1.
                    double w = cfg.domain_weighting ? n_dom * dw.w.at(post.domain) : 1.0;
                    double scale = w / static_cast<double>(batch.size());
                    double l = loss_and_gradients(params, tokens_to_ids(params, post.tokens),
                                                  post.gold->labels, loss_cfg, &grads,
                                                  scale, cfg.dropout > 0.0, &drop_rng);
                    batch_loss += scale * l;
                }
            } catch (const Error&) {
                failed = true;  // non-finite loss/gradient: keep the best checkpoint
                break;
            }
            if (!std::isfinite(batch_loss)) {
                failed = true;
                break;
            }
            clip_gradients(grads, cfg.clip_norm);
            for (auto& [name, v] : velocity) {
                const Tensor& g = grads.at(name);
                Tensor& t = params.tensor(name);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v.v[i] = cfg.momentum * v.v[i] - cfg.lr * g.v[i];
                    t.v[i] += v.v[i];
                }
            }
            epoch_loss += batch_loss;
        }
        if (failed) {
            log.aborted = true;
            break;
        }

        EpochLog el;
        el.epoch = epoch;
        el.loss = batches.empty() ? 0.0 : epoch_loss / static_cast<double>(batches.size());
        std::map<Domain, std::size_t> dev_domains = domain_counts(dev_set);
        double macro = 0.0;
        for (const auto& [d, _] : dev_domains) {
            double f1 = model_token_f1(params, filter_domain(dev_set, d), loss_cfg);
            el.dev_f1[domain_to_string(d)] = f1;
            macro += f1;
        }
        el.macro_dev_f1 =
            dev_domains.empty() ? 0.0 : macro / static_cast<double>(dev_domains.size());
        log.epochs.push_back(el);

        if (log.best_epoch < 0 || el.macro_dev_f1 > log.best_f1) {
            log.best_epoch = epoch;
            log.best_f1 = el.macro_dev_f1;
            result.params = params;
            since_best = 0;
        } else if (++since_best >= cfg.patience) {
            break;
        }
    }
    return result;
}

GridResult grid_search(const Corpus& train_set, const Corpus& dev_set,
                       const TrainConfig& cfg, const LossConfig& loss_cfg,
                       const EncoderConfig& encoder_cfg) {
    cfg.validate();
    std::vector<double> lrs = cfg.lr_grid;
    std::vector<int> batches = cfg.batch_grid;
    std::vector<double> drops = cfg.dropout_grid;
    std::sort(lrs.begin(), lrs.end());
    std::sort(batches.begin(), batches.end());
    std::sort(drops.begin(), drops.end());

    GridResult out;
    out.best = cfg;
    double best_f1 = -1.0;
    for (double lr : lrs)
        for (int bs : batches)
            for (double dr : drops) {
                TrainConfig run = cfg;
                run.lr = lr;
                run.batch_size = bs;
                run.dropout = dr;
                TrainResult r = train(train_set, dev_set, run, loss_cfg, encoder_cfg);
                GridEntry e{lr, bs, dr, r.log.best_f1, r.log.best_epoch};
                out.table.push_back(e);
                // ascending iteration + strict improvement = smallest wins ties
                if (e.dev_f1 > best_f1) {
                    best_f1 = e.dev_f1;
                    out.best = run;
                }
            }
    return out;
}

CrossDomainResult cross_domain_eval(const Corpus& train_set, const Corpus& test_set,
                                    const TrainConfig& cfg, const LossConfig& loss_cfg,
                                    const EncoderConfig& encoder_cfg) {
    std::map<Domain, std::size_t> counts = domain_counts(train_set);
    if (counts.size() < 2) throw invalid_error("cross-domain eval needs >= 2 domains");

    CrossDomainResult out;
    std::vector<Domain> domains;
    for (const auto& [d, _] : counts) {
        domains.push_back(d);
        out.cols.push_back(domain_to_string(d));
    }

    auto eval_row = [&](const LabelerParams& p) {
        std::vector<double> row;
        for (Domain d : domains)
            row.push_back(model_token_f1(p, filter_domain(test_set, d), loss_cfg));
        return row;
    };

    for (Domain src : domains) {
        TrainConfig run = cfg;
        run.single_domain = src;
        TrainResult r = train(train_set, test_set, run, loss_cfg, encoder_cfg);
        out.rows.push_back(domain_to_string(src));
        out.token_f1.push_back(eval_row(r.params));
    }
    TrainResult multi = train(train_set, test_set, cfg, loss_cfg, encoder_cfg);
    out.rows.push_back("multi");
    out.token_f1.push_back(eval_row(multi.params));
    return out;
}

std::string train_log_to_string(const TrainLog& log) {
    std::ostringstream out;
    for (const auto& e : log.epochs) {
        out << "epoch=" << e.epoch << " loss=" << e.loss
            << " macro_dev_f1=" << e.macro_dev_f1;
        for (const auto& [d, f1] : e.dev_f1) out << " dev_f1." << d << "=" << f1;
        out << '\n';
    }
    out << "best_epoch=" << log.best_epoch << " best_f1=" << log.best_f1 << '\n';
    if (log.aborted) out << "aborted=1\n";
    return out.str();
}

std::string grid_to_string(const GridResult& g) {
    std::ostringstream out;
    for (const auto& e : g.table)
        out << "lr=" << e.lr << " batch=" << e.batch_size << " dropout=" << e.dropout
            << " dev_f1=" << e.dev_f1 << " best_epoch=" << e.best_epoch << '\n';
    out << "best lr=" << g.best.lr << " batch=" << g.best.batch_size
        << " dropout=" << g.best.dropout << '\n';
    return out.str();
}

std::string cross_domain_to_string(const CrossDomainResult& m) {
    std::ostringstream out;
    out << "train\\test";
    for (const auto& c : m.cols) out << '\t' << c;
    out << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        out << m.rows[i];
        for (double f1 : m.token_f1[i]) out << '\t' << f1;
        out << '\n';
    }
    return out.str();
}

}  // namespace spanlab
