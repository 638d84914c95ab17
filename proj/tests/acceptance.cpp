// Acceptance suite: 12 criteria, one pass/fail line each.
// argv[1] = path to the spanlab CLI binary (used by the determinism check).
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spanlab/agreement.hpp"
#include "spanlab/augment.hpp"
#include "spanlab/explain.hpp"
#include "spanlab/metrics.hpp"
#include "spanlab/synth.hpp"
#include "spanlab/trainer.hpp"

using namespace spanlab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr BioLabel O = BioLabel::O;
constexpr BioLabel B = BioLabel::B_TOXIC;
constexpr BioLabel I = BioLabel::I_TOXIC;

std::string g_cli;

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

// ---- shared trained state (criteria 8-10) ---------------------------------

struct Trained {
    Corpus train, dev, test;
    LossConfig crf_loss;
    TrainResult crf;
    double train_seconds = 0.0;
};

const Trained& trained() {
    static Trained t = [] {
        Trained s;
        SynthConfig sc;  // 3 domains, 600 posts, 30-word lexicon, seed 42
        Corpus all = synth_corpus(sc);
        SplitResult split = stratified_split(all, SplitSpec{});
        s.train = std::move(split.train);
        s.dev = std::move(split.dev);
        s.test = std::move(split.test);
        EncoderConfig enc;  // recurrent, embed 32, hidden 64
        enc.vocab_size = static_cast<int>(build_vocab(s.train).size());
        TrainConfig cfg;
        cfg.lr = 0.1;
        cfg.batch_size = 16;
        cfg.dropout = 0.0;
        cfg.max_epochs = 20;
        auto t0 = Clock::now();
        s.crf = train(s.train, s.dev, cfg, s.crf_loss, enc);
        s.train_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return s;
    }();
    return t;
}

double test_span_f1(const LabelerParams& p, const Corpus& c, const LossConfig& loss) {
    std::vector<CharSpanSet> preds, golds;
    for (const auto& post : c.posts) {
        auto ids = tokens_to_ids(p, post.tokens);
        preds.push_back(spans_from_tags(post.tokens, predict(p, ids, loss)));
        golds.push_back(spans_from_tags(post.tokens, *post.gold));
    }
    return corpus_span_f1(preds, golds);
}

// ---- criteria -------------------------------------------------------------

Check crf_oracle() {
    Check c;
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        int t_len = 1 + static_cast<int>(rng() % 6);
        Tensor e = Tensor::zeros(t_len, 3);
        for (auto& x : e.v) x = u(rng);
        CrfParams crf;
        for (auto& x : crf.trans) x = u(rng);
        for (auto& x : crf.start) x = u(rng);
        for (auto& x : crf.stop) x = u(rng);

        int total = 1;
        for (int t = 0; t < t_len; ++t) total *= 3;
        double mx = -1e300, best = -1e300;
        std::vector<double> scores;
        std::vector<BioLabel> path(t_len);
        for (int code = 0; code < total; ++code) {
            int k = code;
            for (int t = 0; t < t_len; ++t) {
                path[t] = static_cast<BioLabel>(k % 3);
                k /= 3;
            }
            double s = crf_score(e, crf, path);
            scores.push_back(s);
            mx = std::max(mx, s);
            best = std::max(best, s);
        }
        double sum = 0;
        for (double s : scores) sum += std::exp(s - mx);
        double want = mx + std::log(sum);
        c.expect(std::abs(crf_log_partition(e, crf) - want) <= 1e-8 * std::max(1.0, std::abs(want)),
                 "log partition mismatch");
        c.expect(crf_score(e, crf, viterbi_decode(e, crf).labels) == best,
                 "viterbi score differs from brute-force max");
    }
    return c;
}

Check gradient_checks() {
    Check c;
    const double eps = 1e-4;
    std::vector<std::string> vocab{"<UNK>", "<MASK>", "a", "b", "c", "d", "e", "f"};
    std::vector<int> ids{2, 3, 4, 0, 7};
    std::vector<BioLabel> gold{O, B, I, I, O};
    for (EncoderKind kind :
         {EncoderKind::EmbedBiRecurrent, EncoderKind::EmbedSelfAttention}) {
        EncoderConfig enc;
        enc.kind = kind;
        enc.vocab_size = 8;
        enc.embed_dim = 6;
        enc.hidden_dim = 8;
        enc.attention_heads = 2;
        enc.seed = 3;
        LabelerParams p = init_params(enc, vocab);
        for (LossKind lk : {LossKind::CrfNll, LossKind::SoftmaxNllWeighted,
                            LossKind::FocalLoss}) {
            LossConfig cfg;
            cfg.kind = lk;
            cfg.weights = {0.5, 2.0, 2.5};
            cfg.derived_weights = false;
            Gradients grads = zero_gradients(p);
            loss_and_gradients(p, ids, gold, cfg, &grads);
            for (auto& [name, tensor] : p.tensors) {
                for (std::size_t i = 0; i < tensor.size() && c.ok; ++i) {
                    double saved = tensor.v[i];
                    tensor.v[i] = saved + eps;
                    double lp = loss_and_gradients(p, ids, gold, cfg, nullptr);
                    tensor.v[i] = saved - eps;
                    double lm = loss_and_gradients(p, ids, gold, cfg, nullptr);
                    tensor.v[i] = saved;
                    double fd = (lp - lm) / (2 * eps);
                    double g = grads.at(name).v[i];
                    double denom = std::max({std::abs(fd), std::abs(g), 1e-6});
                    c.expect(std::abs(g - fd) / denom <= 1e-4,
                             "gradient mismatch in " + name);
                }
            }
        }
    }
    return c;
}

Check bio_elimination() {
    Check c;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int invalid_constrained = 0, invalid_argmax = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int t_len = 2 + static_cast<int>(rng() % 5);
        Tensor e = Tensor::zeros(t_len, 3);
        for (auto& x : e.v) x = u(rng);
        CrfParams crf;
        for (auto& x : crf.trans) x = u(rng);
        if (!viterbi_decode(e, constrain_bio_transitions(crf)).valid())
            ++invalid_constrained;
        if (!argmax_decode(e).valid()) ++invalid_argmax;
    }
    c.expect(invalid_constrained == 0, "constrained decoding emitted invalid BIO");
    c.expect(invalid_argmax > 0, "unconstrained argmax never produced invalid BIO");
    return c;
}

Check class_weight_values() {
    Check c;
    auto w = class_weights(72, 15, 13);
    // computed (0.46, 2.22, 2.56) at 2 decimals, within 0.01 of the target
    auto r2 = [](double x) { return std::round(x * 100.0) / 100.0; };
    c.expect(std::abs(r2(w[0]) - 0.46) <= 0.01 + 1e-12, "w_O outside 0.46 +- 0.01");
    c.expect(std::abs(r2(w[1]) - 2.21) <= 0.01 + 1e-12, "w_B outside 2.21 +- 0.01");
    c.expect(std::abs(r2(w[2]) - 2.56) <= 0.01 + 1e-12, "w_I outside 2.56 +- 0.01");
    return c;
}

Check focal_reduction() {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    LossConfig cfg;
    cfg.gamma = 0.0;
    cfg.weights = {0.46, 2.21, 2.56};
    std::vector<BioLabel> gold{O, B, I, O, B};
    for (int trial = 0; trial < 200; ++trial) {
        Tensor e = Tensor::zeros(5, 3);
        for (auto& x : e.v) x = u(rng);
        double diff = std::abs(focal_loss(e, gold, cfg) - softmax_nll(e, gold, cfg));
        c.expect(diff <= 1e-10, "focal(gamma=0) differs from weighted CE");
    }
    return c;
}

Check span_metric_oracle() {
    Check c;
    CharSpanSet pred, gold;
    for (int i = 3; i <= 10; ++i) pred.insert(i);
    for (int i = 5; i <= 12; ++i) gold.insert(i);
    Prf worked = span_prf(pred, gold);
    c.expect(std::abs(worked.precision - 0.75) < 1e-12 &&
                 std::abs(worked.recall - 0.75) < 1e-12,
             "worked case 3..10 vs 5..12 is not P=R=0.75");

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        CharSpanSet p, g;
        for (int s = 0; s < static_cast<int>(rng() % 4); ++s) {
            int lo = static_cast<int>(rng() % 30);
            for (int i = lo; i <= std::min(29, lo + static_cast<int>(rng() % 6)); ++i)
                p.insert(i);
        }
        for (int s = 0; s < static_cast<int>(rng() % 4); ++s) {
            int lo = static_cast<int>(rng() % 30);
            for (int i = lo; i <= std::min(29, lo + static_cast<int>(rng() % 6)); ++i)
                g.insert(i);
        }
        // bitmap oracle
        int tp = 0, fp = 0, fn = 0;
        for (int i = 0; i < 30; ++i) {
            bool in_p = p.count(i), in_g = g.count(i);
            tp += in_p && in_g;
            fp += in_p && !in_g;
            fn += !in_p && in_g;
        }
        Prf want;
        if (p.empty() && g.empty()) {
            want.precision = want.recall = want.f1 = 1.0;
        } else if (!p.empty() && !g.empty()) {
            want.precision = double(tp) / (tp + fp);
            want.recall = double(tp) / (tp + fn);
            if (want.precision + want.recall > 0)
                want.f1 = 2 * want.precision * want.recall /
                          (want.precision + want.recall);
        }
        Prf got = span_prf(p, g);
        c.expect(got.precision == want.precision && got.recall == want.recall &&
                     got.f1 == want.f1,
                 "span PRF differs from the bitmap oracle");
    }
    return c;
}

Check agreement_sanity() {
    Check c;
    std::vector<BioLabel> a{O, B, I, O, B, O};
    KappaResult k = cohen_kappa(a, a);
    c.expect(k.kappa == 1.0, "identical annotations do not give kappa 1");
    std::vector<std::vector<int>> same{{0, 1, 2, 0}, {0, 1, 2, 0}};
    c.expect(krippendorff_alpha(same) == 1.0,
             "identical annotations do not give alpha 1");

    // 4-unit worked example: 3 annotators, one missing value
    std::vector<std::vector<int>> values{
        {0, 1, 2, 0}, {0, 1, 1, 0}, {0, -1, 2, 1}};
    // independent coincidence-matrix oracle
    std::array<std::array<double, 3>, 3> o{};
    std::array<double, 3> n_c{};
    double n = 0;
    for (std::size_t u = 0; u < 4; ++u) {
        std::vector<int> vals;
        for (const auto& row : values)
            if (row[u] >= 0) vals.push_back(row[u]);
        double m = static_cast<double>(vals.size());
        if (m < 2) continue;
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = 0; j < vals.size(); ++j)
                if (i != j) o[vals[i]][vals[j]] += 1.0 / (m - 1.0);
    }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) n_c[x] += o[x][y];
    for (double v : n_c) n += v;
    double d_o = 0, d_e = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) {
                d_o += o[x][y];
                d_e += n_c[x] * n_c[y] / (n - 1.0);
            }
    double want = 1.0 - d_o / d_e;
    double got = krippendorff_alpha(values);
    c.expect(std::abs(got - want) <= 1e-12, "worked alpha differs from the oracle");
    return c;
}

Check ig_completeness() {
    Check c;
    // linear model: residual 0 to 1e-12 for any m
    Tensor w = Tensor::zeros(4, 3);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& e : w.v) e = u(rng);
    ScalarFn lin = [&](const Tensor& x, Tensor* dx) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w.v[i] * x.v[i];
        if (dx) *dx = w;
        return s;
    };
    Tensor x = Tensor::zeros(4, 3), base = Tensor::zeros(4, 3);
    for (auto& e : x.v) e = u(rng);
    for (int m : {1, 7, 50}) {
        AttributionMap a = integrated_gradients(lin, x, base, m);
        c.expect(a.completeness_residual <= 1e-12,
                 "linear residual above 1e-12 at m=" + std::to_string(m));
    }

    // trained model: residual(200) < residual(10) and <= 1% of |F(X)-F(X')|
    const Trained& t = trained();
    const Post& post = t.test.posts.front();
    auto ids = tokens_to_ids(t.crf.params, post.tokens);
    AttributionMap a10 = integrated_gradients(t.crf.params, ids, t.crf_loss, 10);
    AttributionMap a200 = integrated_gradients(t.crf.params, ids, t.crf_loss, 200);
    c.expect(a200.completeness_residual < a10.completeness_residual,
             "residual did not shrink from 10 to 200 steps");
    double span = std::abs(a200.f_input - a200.f_baseline);
    c.expect(a200.completeness_residual <= 0.01 * std::max(span, 1e-12),
             "residual above 1% of |F(X)-F(X')| at m=200");
    return c;
}

Check end_to_end_learning() {
    Check c;
    const Trained& t = trained();
    c.expect(t.train_seconds < 300.0, "training exceeded 5 minutes");
    c.expect(static_cast<int>(t.crf.log.epochs.size()) <= 20, "more than 20 epochs");
    double token = model_token_f1(t.crf.params, t.test, t.crf_loss);
    double span = test_span_f1(t.crf.params, t.test, t.crf_loss);
    c.expect(token >= 0.90, "held-out token F1 " + std::to_string(token) + " < 0.90");
    c.expect(span >= 0.85, "held-out span F1 " + std::to_string(span) + " < 0.85");
    return c;
}

Check qualitative_orderings() {
    Check c;
    const Trained& t = trained();
    EncoderConfig enc;
    enc.vocab_size = static_cast<int>(build_vocab(t.train).size());
    TrainConfig cfg;
    cfg.lr = 0.1;
    cfg.batch_size = 16;
    cfg.dropout = 0.0;
    cfg.max_epochs = 20;

    // (a) CRF head >= softmax head token F1
    LossConfig soft;
    soft.kind = LossKind::SoftmaxNllWeighted;
    TrainResult sm = train(t.train, t.dev, cfg, soft, enc);
    double f_crf = model_token_f1(t.crf.params, t.test, t.crf_loss);
    double f_soft = model_token_f1(sm.params, t.test, soft);
    c.expect(f_crf >= f_soft, "CRF token F1 below the softmax head");

    // (b) cross-domain: mean off-diagonal < mean diagonal
    TrainConfig quick = cfg;
    quick.max_epochs = 8;
    CrossDomainResult m = cross_domain_eval(t.train, t.test, quick, t.crf_loss, enc);
    double diag = 0, off = 0;
    int n_diag = 0, n_off = 0;
    for (std::size_t r = 0; r + 1 < m.rows.size(); ++r)  // skip the multi row
        for (std::size_t k = 0; k < m.cols.size(); ++k) {
            if (r == k) {
                diag += m.token_f1[r][k];
                ++n_diag;
            } else {
                off += m.token_f1[r][k];
                ++n_off;
            }
        }
    c.expect(off / n_off < diag / n_diag,
             "off-diagonal F1 not below the in-domain diagonal");

    // (c) supervised CRF > ARE extraction token F1
    RationaleConfig rcfg;
    AreTrainConfig acfg;
    acfg.epochs = 15;
    LabelerParams are = are_train(t.train, rcfg, acfg, enc);
    std::vector<TagSequence> preds, golds;
    for (const auto& post : t.test.posts) {
        preds.push_back(are_extract(are, tokens_to_ids(are, post.tokens), rcfg));
        golds.push_back(*post.gold);
    }
    double f_are = token_prf(preds, golds).f1;
    c.expect(f_crf > f_are, "supervised CRF not above ARE extraction");
    return c;
}

Check augmentation_properties() {
    Check c;
    SynthConfig sc;
    sc.n_posts = 150;  // ~1500 tokens; mask 10k+ tokens via repetition below
    Corpus base = synth_corpus(sc);
    Corpus big;
    while (big.posts.size() * 10 < 16000) {  // >= 10k non-toxic tokens
        for (auto p : base.posts) {
            p.id += "-" + std::to_string(big.posts.size());
            big.posts.push_back(std::move(p));
        }
    }
    AugmentConfig cfg;
    cfg.masking.enabled = true;
    cfg.masking.mask_prob = 0.05;
    cfg.synonym.enabled = false;  // synonym/codeswitch need dictionaries
    Corpus masked = augment_corpus(big, cfg);

    std::size_t tokens = 0, masked_n = 0;
    for (std::size_t i = 0; i < big.posts.size(); ++i) {
        const Post& a = big.posts[i];
        const Post& b = masked.posts[i];
        c.expect(b.gold->labels == a.gold->labels, "labels changed by masking");
        for (std::size_t t = 0; t < a.tokens.size(); ++t) {
            if (a.gold->labels[t] == O) {
                ++tokens;
                if (b.tokens[t].surface != a.tokens[t].surface) ++masked_n;
            } else {
                c.expect(b.tokens[t].surface == a.tokens[t].surface,
                         "toxic token altered by masking");
            }
        }
    }
    double rate = static_cast<double>(masked_n) / static_cast<double>(tokens);
    c.expect(tokens >= 10000, "fewer than 10k tokens sampled");
    c.expect(std::abs(rate - 0.05) <= 0.01, "mask rate outside 5% +- 1%");

    // synonym + codeswitch with ad-hoc dictionaries: toxic surfaces and labels
    // must survive every augmenter
    AugmentDictionary dict;
    for (const auto& p : base.posts)
        for (std::size_t t = 0; t < p.tokens.size(); ++t)
            if (p.gold->labels[t] == O) dict[p.tokens[t].surface] = {"repl"};
    std::mt19937_64 rng(13);
    AugmentConfig all;
    all.synonym.enabled = true;
    all.codeswitch.enabled = true;
    for (const auto& p : base.posts) {
        Post q = synonym_replace(p, all, dict, rng);
        q = codeswitch(q, all, dict, rng, true);
        c.expect(q.gold->labels == p.gold->labels, "labels changed by augmenter");
        for (std::size_t t = 0; t < p.tokens.size(); ++t)
            if (p.gold->labels[t] != O)
                c.expect(q.tokens[t].surface == p.tokens[t].surface,
                         "toxic token altered by synonym/codeswitch");
    }
    return c;
}

// ---- criterion 12: CLI determinism ---------------------------------------

int run_cli(const std::string& args, std::string* output) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::array<char, 4096> buf;
    size_t n;
    output->clear();
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output->append(buf.data(), n);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Check cli_determinism() {
    Check c;
    // fixtures: a synthetic corpus with annotator columns, raw JSONL, a dict
    SynthConfig sc;
    sc.n_posts = 60;
    sc.lexicon_size = 9;
    Corpus fix = synth_corpus(sc);
    for (auto& p : fix.posts) {
        p.annotator_labels["a1"] = *p.gold;
        p.annotator_labels["a2"] = *p.gold;
    }
    save_corpus(fix, "acc_fix.tsv");
    {
        std::ofstream raw("acc_raw.jsonl");
        raw << "{\"id\":\"r1\",\"domain\":\"news\",\"text\":\"yeh aik test hai\"}\n"
            << "{\"id\":\"r2\",\"domain\":\"youtube\",\"text\":\"bilkul theek\"}\n";
        std::ofstream dict("acc_dict.tsv");
        dict << "aik\tek\n";
    }

    const std::string small =
        " --set train.max_epochs=3 --set train.lr=0.2"
        " --set encoder.embed_dim=8 --set encoder.hidden_dim=8";
    struct Step {
        std::string args;
        std::vector<std::string> files;  // outputs to compare bytewise
    };
    std::vector<Step> steps{
        {"synth --output acc_s.tsv --set synth.posts=40 --set synth.lexicon_size=9",
         {"acc_s.tsv"}},
        {"preprocess --input acc_raw.jsonl --output acc_p.tsv", {"acc_p.tsv"}},
        {"stats --input acc_fix.tsv", {}},
        {"agreement --input acc_fix.tsv", {}},
        {"split --input acc_fix.tsv --output acc_sp",
         {"acc_sp.train", "acc_sp.dev", "acc_sp.test"}},
        {"train --input acc_fix.tsv --dev acc_fix.tsv --model acc_m.bin" + small,
         {"acc_m.bin"}},
        {"grid --input acc_fix.tsv --dev acc_fix.tsv" + small +
             " --set train.lr_grid=0.0,0.2 --set train.batch_grid=16"
             " --set train.dropout_grid=0.0",
         {}},
        {"eval --input acc_fix.tsv --model acc_m.bin", {}},
        {"crossdomain --input acc_fix.tsv --test acc_fix.tsv" + small, {}},
        {"predict --input acc_fix.tsv --model acc_m.bin --output acc_pr.tsv",
         {"acc_pr.tsv"}},
        {"explain --input acc_fix.tsv --model acc_m.bin --mode spans --format html",
         {}},
        {"augment --input acc_fix.tsv --output acc_a.tsv"
         " --set augment.mask.enabled=true --set augment.mask.prob=0.3",
         {"acc_a.tsv"}},
    };
    for (const auto& step : steps) {
        std::string out1, out2;
        int c1 = run_cli(step.args, &out1);
        std::vector<std::string> files1;
        for (const auto& f : step.files) files1.push_back(slurp(f));
        int c2 = run_cli(step.args, &out2);
        c.expect(c1 == 0 && c2 == 0, "nonzero exit for: " + step.args);
        c.expect(out1 == out2, "stdout differs across reruns: " + step.args);
        for (std::size_t i = 0; i < step.files.size(); ++i)
            c.expect(slurp(step.files[i]) == files1[i],
                     "output file differs across reruns: " + step.files[i]);
        if (!c.ok) break;
    }
    for (const char* f : {"acc_fix.tsv", "acc_raw.jsonl", "acc_dict.tsv",
                          "acc_s.tsv", "acc_p.tsv", "acc_sp.train", "acc_sp.dev",
                          "acc_sp.test", "acc_m.bin", "acc_pr.tsv", "acc_a.tsv"})
        std::remove(f);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    struct Criterion {
        const char* name;
        std::function<Check()> fn;
        double limit_seconds;  // 0: no limit asserted
    };
    std::vector<Criterion> criteria{
        {"CRF oracle equivalence (1000 instances, T<=6)", crf_oracle, 30.0},
        {"gradient correctness (3 losses x 2 encoders, FD eps=1e-4)", gradient_checks, 60.0},
        {"invalid-BIO elimination (10k matrices)", bio_elimination, 0},
        {"class weights 72/15/13 -> (0.46, 2.21, 2.56)", class_weight_values, 0},
        {"focal gamma=0 equals weighted cross-entropy", focal_reduction, 0},
        {"span metric bitmap oracle incl. 3..10 vs 5..12", span_metric_oracle, 0},
        {"agreement sanity (kappa=alpha=1; 4-unit worked alpha)", agreement_sanity, 0},
        {"integrated-gradients completeness", ig_completeness, 0},
        {"end-to-end synthetic learning (token>=0.90, span>=0.85)", end_to_end_learning, 0},
        {"qualitative orderings (crf>=softmax, domain transfer, crf>are)", qualitative_orderings, 0},
        {"augmentation properties (mask 5%+-1%, toxic untouched)", augmentation_properties, 0},
        {"CLI determinism (byte-identical reruns)", cli_determinism, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = criteria[i].fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
            c.ok = false;
            c.why = "runtime limit exceeded";
        }
        std::printf("criterion %2zu: %-62s %s (%.1fs)%s%s\n", i + 1,
                    criteria[i].name, c.ok ? "pass" : "FAIL", secs,
                    c.ok ? "" : " -- ", c.ok ? "" : c.why.c_str());
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
