#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "spanlab/errors.hpp"
#include "spanlab/labeler.hpp"

using namespace spanlab;

namespace {

constexpr BioLabel O = BioLabel::O;
constexpr BioLabel B = BioLabel::B_TOXIC;
constexpr BioLabel I = BioLabel::I_TOXIC;

std::vector<std::string> small_vocab() {
    return {"<UNK>", "<MASK>", "aik", "bura", "lafz", "theek", "hai", "nahi"};
}

EncoderConfig small_config(EncoderKind kind) {
    EncoderConfig cfg;
    cfg.kind = kind;
    cfg.vocab_size = 8;
    cfg.embed_dim = 6;
    cfg.hidden_dim = 8;
    cfg.attention_heads = 2;
    cfg.seed = 7;
    return cfg;
}

// Flattened-parameter finite differences: perturb every tensor entry and
// compare against the analytic gradient.
void check_all_gradients(LabelerParams& p, const std::vector<int>& ids,
                         const std::vector<BioLabel>& gold, const LossConfig& cfg) {
    const double eps = 1e-4;
    Gradients grads = zero_gradients(p);
    loss_and_gradients(p, ids, gold, cfg, &grads);
    for (auto& [name, tensor] : p.tensors) {
        const Tensor& g = grads.at(name);
        for (std::size_t i = 0; i < tensor.size(); ++i) {
            double saved = tensor.v[i];
            tensor.v[i] = saved + eps;
            double lp = loss_and_gradients(p, ids, gold, cfg, nullptr);
            tensor.v[i] = saved - eps;
            double lm = loss_and_gradients(p, ids, gold, cfg, nullptr);
            tensor.v[i] = saved;
            double fd = (lp - lm) / (2 * eps);
            double denom = std::max({std::abs(fd), std::abs(g.v[i]), 1e-6});
            INFO("tensor ", name, " index ", i);
            CHECK(std::abs(g.v[i] - fd) / denom <= 1e-4);
        }
    }
}

}  // namespace

TEST_CASE("encoder config validation") {
    EncoderConfig cfg = small_config(EncoderKind::EmbedBiRecurrent);
    cfg.validate();
    cfg.hidden_dim = 7;  // must be even for the two directions
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = small_config(EncoderKind::EmbedSelfAttention);
    cfg.attention_heads = 3;  // must divide hidden_dim
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = small_config(EncoderKind::EmbedBiRecurrent);
    cfg.dropout_rate = 1.5;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = small_config(EncoderKind::EmbedBiRecurrent);
    cfg.vocab_size = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("init params is deterministic and seed-sensitive") {
    EncoderConfig cfg = small_config(EncoderKind::EmbedBiRecurrent);
    LabelerParams a = init_params(cfg, small_vocab());
    LabelerParams b = init_params(cfg, small_vocab());
    CHECK(a.tensor("embed").v == b.tensor("embed").v);
    CHECK(a.tensor("rnn.wxf").v == b.tensor("rnn.wxf").v);
    cfg.seed = 8;
    LabelerParams c = init_params(cfg, small_vocab());
    CHECK(a.tensor("embed").v != c.tensor("embed").v);
    // transitions start at zero
    for (double x : a.tensor("crf.trans").v) CHECK(x == 0.0);
}

TEST_CASE("tokens_to_ids maps OOV to the unk index") {
    LabelerParams p = init_params(small_config(EncoderKind::EmbedBiRecurrent),
                                  small_vocab());
    std::vector<Token> toks;
    for (const std::string& w : {"bura", "zzz", "<MASK>", "hai"})
        toks.push_back({w, 0, 1});
    auto ids = tokens_to_ids(p, toks);
    CHECK(ids == std::vector<int>{3, kUnkIndex, kMaskIndex, 6});
}

TEST_CASE("encode is deterministic without dropout") {
    for (EncoderKind kind :
         {EncoderKind::EmbedBiRecurrent, EncoderKind::EmbedSelfAttention}) {
        LabelerParams p = init_params(small_config(kind), small_vocab());
        std::vector<int> ids{2, 3, 4, 5};
        EncodeCache a = encode(p, ids);
        EncodeCache b = encode(p, ids);
        CHECK(a.emissions.v == b.emissions.v);
        CHECK(a.emissions.rows == 4);
        CHECK(a.emissions.cols == 3);
        for (double x : a.emissions.v) CHECK(std::isfinite(x));
    }
}

TEST_CASE("dropout zeroes inputs only in training mode") {
    EncoderConfig cfg = small_config(EncoderKind::EmbedBiRecurrent);
    cfg.dropout_rate = 0.5;
    LabelerParams p = init_params(cfg, small_vocab());
    std::vector<int> ids{2, 3, 4, 5, 6, 7};
    EncodeCache eval_pass = encode(p, ids, false);
    EncodeCache eval_pass2 = encode(p, ids, false);
    CHECK(eval_pass.emissions.v == eval_pass2.emissions.v);

    std::mt19937_64 rng(11);
    EncodeCache train_pass = encode(p, ids, true, &rng);
    int zeros = 0;
    for (double x : train_pass.x.v)
        if (x == 0.0) ++zeros;
    CHECK(zeros > 0);  // with p=0.5 over 36 entries this is near-certain
    CHECK(train_pass.emissions.v != eval_pass.emissions.v);
}

TEST_CASE("gradients match finite differences for every loss and encoder") {
    std::vector<int> ids{2, 3, 4, 0, 7};
    std::vector<BioLabel> gold{O, B, I, I, O};
    for (EncoderKind kind :
         {EncoderKind::EmbedBiRecurrent, EncoderKind::EmbedSelfAttention}) {
        LabelerParams p = init_params(small_config(kind), small_vocab());
        for (LossKind lk : {LossKind::CrfNll, LossKind::SoftmaxNllWeighted,
                            LossKind::FocalLoss}) {
            LossConfig cfg;
            cfg.kind = lk;
            cfg.weights = {0.5, 2.0, 2.5};
            cfg.derived_weights = false;
            check_all_gradients(p, ids, gold, cfg);
        }
    }
}

TEST_CASE("loss scale multiplies the accumulated gradient") {
    LabelerParams p = init_params(small_config(EncoderKind::EmbedBiRecurrent),
                                  small_vocab());
    std::vector<int> ids{2, 3, 4};
    std::vector<BioLabel> gold{O, B, I};
    LossConfig cfg;
    Gradients g1 = zero_gradients(p);
    loss_and_gradients(p, ids, gold, cfg, &g1, 1.0);
    Gradients g2 = zero_gradients(p);
    loss_and_gradients(p, ids, gold, cfg, &g2, 2.5);
    for (const auto& [name, t] : g1)
        for (std::size_t i = 0; i < t.size(); ++i)
            CHECK(g2.at(name).v[i] == doctest::Approx(2.5 * t.v[i]).epsilon(1e-10));
}

TEST_CASE("predict returns valid sequences under the crf head") {
    std::mt19937_64 rng(13);
    LabelerParams p = init_params(small_config(EncoderKind::EmbedSelfAttention),
                                  small_vocab());
    // randomize the transition scores so decoding is non-trivial
    for (auto& x : p.tensor("crf.trans").v) x = (rng() % 100) / 25.0 - 2.0;
    LossConfig cfg;
    for (int trial = 0; trial < 200; ++trial) {
        int t_len = 1 + static_cast<int>(rng() % 6);
        std::vector<int> ids(t_len);
        for (auto& id : ids) id = static_cast<int>(rng() % 8);
        TagSequence tags = predict(p, ids, cfg);
        CHECK(tags.labels.size() == static_cast<std::size_t>(t_len));
        CHECK(tags.valid());
    }
}

TEST_CASE("params round trip through the binary container") {
    EncoderConfig cfg = small_config(EncoderKind::EmbedSelfAttention);
    cfg.dropout_rate = 0.25;
    LabelerParams p = init_params(cfg, small_vocab());
    p.tensor("crf.trans").v[4] = 1.25;
    const std::string path = "test_labeler_roundtrip.bin";
    save_params(p, path);
    LabelerParams q = load_params(path);
    CHECK(q.config.kind == cfg.kind);
    CHECK(q.config.embed_dim == cfg.embed_dim);
    CHECK(q.config.dropout_rate == cfg.dropout_rate);
    CHECK(q.vocab == p.vocab);
    REQUIRE(q.tensors.size() == p.tensors.size());
    for (const auto& [name, t] : p.tensors) CHECK(q.tensor(name).v == t.v);
    std::remove(path.c_str());
}

TEST_CASE("load rejects corrupt and truncated files") {
    LabelerParams p = init_params(small_config(EncoderKind::EmbedBiRecurrent),
                                  small_vocab());
    const std::string path = "test_labeler_corrupt.bin";
    save_params(p, path);

    // truncation
    {
        std::ifstream in(path, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), {});
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write(all.data(), static_cast<std::streamsize>(all.size() / 2));
    }
    CHECK_THROWS_AS(load_params(path), Error);

    // bad magic
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "NOPE" << std::string(64, '\0');
    }
    try {
        load_params(path);
        FAIL("expected parse_error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_params("no-such-model.bin"), Error);
}

TEST_CASE("toxicity score gradient matches finite differences") {
    const double eps = 1e-4;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (EncoderKind kind :
         {EncoderKind::EmbedBiRecurrent, EncoderKind::EmbedSelfAttention}) {
        for (LossKind lk : {LossKind::CrfNll, LossKind::SoftmaxNllWeighted}) {
            LabelerParams p = init_params(small_config(kind), small_vocab());
            LossConfig cfg;
            cfg.kind = lk;
            Tensor x = Tensor::zeros(4, p.config.embed_dim);
            for (auto& e : x.v) e = u(rng);
            Tensor dx;
            double f = toxicity_score(p, x, cfg, &dx);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            for (std::size_t i = 0; i < x.size(); ++i) {
                Tensor xp = x, xm = x;
                xp.v[i] += eps;
                xm.v[i] -= eps;
                double fd = (toxicity_score(p, xp, cfg) - toxicity_score(p, xm, cfg)) /
                            (2 * eps);
                double denom = std::max({std::abs(fd), std::abs(dx.v[i]), 1e-8});
                CHECK(std::abs(dx.v[i] - fd) / denom <= 1e-4);
            }
        }
    }
}

TEST_CASE("empty input is rejected") {
    LabelerParams p = init_params(small_config(EncoderKind::EmbedBiRecurrent),
                                  small_vocab());
    CHECK_THROWS_AS(encode(p, {}), Error);
    CHECK_THROWS_AS(predict(p, {}, LossConfig{}), Error);
}
