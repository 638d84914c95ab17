#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/synth.hpp"
#include "spanlab/trainer.hpp"

using namespace spanlab;

namespace {

Corpus small_synth(int n_posts, std::uint64_t seed = 42) {
    SynthConfig cfg;
    cfg.seed = seed;
    cfg.n_posts = n_posts;
    cfg.lexicon_size = 12;
    cfg.filler_vocab = 40;
    cfg.min_len = 5;
    cfg.max_len = 9;
    return cfg.n_posts > 0 ? synth_corpus(cfg) : Corpus{};
}

// Train/dev slices of one generated corpus so they share a vocabulary.
std::pair<Corpus, Corpus> synth_split(int n_train, int n_dev,
                                      std::uint64_t seed = 42) {
    Corpus all = small_synth(n_train + n_dev, seed);
    std::pair<Corpus, Corpus> out;
    for (int i = 0; i < n_train; ++i) out.first.posts.push_back(all.posts[i]);
    for (int i = n_train; i < n_train + n_dev; ++i)
        out.second.posts.push_back(all.posts[i]);
    return out;
}

EncoderConfig tiny_encoder(int vocab_size) {
    EncoderConfig e;
    e.kind = EncoderKind::EmbedBiRecurrent;
    e.vocab_size = vocab_size;
    e.embed_dim = 8;
    e.hidden_dim = 8;
    return e;
}

TrainConfig quick_train(int epochs) {
    TrainConfig t;
    t.lr = 0.2;
    t.batch_size = 16;
    t.dropout = 0.0;
    t.max_epochs = epochs;
    t.patience = 5;
    return t;
}

std::map<Domain, int> batch_domain_counts(const Corpus& c, const Batch& b) {
    std::map<Domain, int> n;
    for (std::size_t i : b) ++n[c.posts[i].domain];
    return n;
}

}  // namespace

TEST_CASE("domain weights are inverse-size normalized") {
    auto w = domain_weights({{Domain::SocialMedia, 5254},
                             {Domain::News, 4300},
                             {Domain::YouTube, 4788}});
    CHECK(w.w.at(Domain::SocialMedia) == doctest::Approx(0.3013).epsilon(5e-4));
    CHECK(w.w.at(Domain::News) == doctest::Approx(0.3681).epsilon(5e-4));
    CHECK(w.w.at(Domain::YouTube) == doctest::Approx(0.3306).epsilon(5e-4));
    double sum = 0;
    for (const auto& [d, v] : w.w) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // equal sizes give equal weights
    auto eq = domain_weights({{Domain::News, 10}, {Domain::YouTube, 10}});
    CHECK(eq.w.at(Domain::News) == doctest::Approx(0.5));
    CHECK_THROWS_AS(domain_weights({{Domain::News, 0}}), Error);
    CHECK_THROWS_AS(domain_weights({}), Error);
}

TEST_CASE("balanced batches give uniform domain composition") {
    // three equal domains, batch of 9 -> exactly 3 from each
    Corpus c;
    for (int i = 0; i < 90; ++i) {
        Post p;
        p.id = "p" + std::to_string(i);
        p.domain = static_cast<Domain>(i % 3);
        p.tokens.push_back({"w", 0, 1});
        p.gold = TagSequence{{BioLabel::O}};
        c.posts.push_back(p);
    }
    auto batches = balanced_batches(c, 9, 1);
    REQUIRE(!batches.empty());
    for (const auto& b : batches) {
        REQUIRE(b.size() == 9);
        for (const auto& [d, n] : batch_domain_counts(c, b)) CHECK(n == 3);
    }
}

TEST_CASE("balanced batches split leftover slots across batches") {
    // two domains, batch of 4 -> 2 + 2; batch of 5 rotates the extra slot
    Corpus c;
    for (int i = 0; i < 40; ++i) {
        Post p;
        p.id = "p" + std::to_string(i);
        p.domain = i % 2 ? Domain::News : Domain::YouTube;
        p.tokens.push_back({"w", 0, 1});
        p.gold = TagSequence{{BioLabel::O}};
        c.posts.push_back(p);
    }
    for (const auto& b : balanced_batches(c, 4, 1)) {
        auto n = batch_domain_counts(c, b);
        CHECK(n[Domain::News] == 2);
        CHECK(n[Domain::YouTube] == 2);
    }
    for (const auto& b : balanced_batches(c, 5, 1)) {
        auto n = batch_domain_counts(c, b);
        CHECK(std::abs(n[Domain::News] - n[Domain::YouTube]) <= 1);
        CHECK(n[Domain::News] + n[Domain::YouTube] == 5);
    }
}

TEST_CASE("small domains are resampled with replacement") {
    Corpus c;
    for (int i = 0; i < 30; ++i) {
        Post p;
        p.id = "p" + std::to_string(i);
        p.domain = i < 27 ? Domain::News : Domain::YouTube;  // 27 vs 3
        p.tokens.push_back({"w", 0, 1});
        p.gold = TagSequence{{BioLabel::O}};
        c.posts.push_back(p);
    }
    auto batches = balanced_batches(c, 6, 3);
    std::map<Domain, int> totals;
    for (const auto& b : batches)
        for (const auto& [d, n] : batch_domain_counts(c, b)) totals[d] += n;
    // the 3 youtube posts must appear repeatedly to fill half of every batch
    CHECK(totals[Domain::YouTube] == totals[Domain::News]);
    CHECK(totals[Domain::YouTube] > 3);
    // determinism
    auto again = balanced_batches(c, 6, 3);
    CHECK(again == batches);
    CHECK(balanced_batches(c, 6, 4) != batches);
}

TEST_CASE("build vocab reserves unk and mask") {
    Corpus c = small_synth(20);
    auto v = build_vocab(c);
    REQUIRE(v.size() >= 2);
    CHECK(v[0] == "<UNK>");
    CHECK(v[1] == "<MASK>");
    std::set<std::string> uniq(v.begin(), v.end());
    CHECK(uniq.size() == v.size());
    for (const auto& p : c.posts)
        for (const auto& t : p.tokens)
            CHECK(uniq.count(t.surface) == 1);
}

TEST_CASE("zero learning rate leaves parameters at initialization") {
    auto [train_set, dev_set] = synth_split(40, 20);
    TrainConfig t = quick_train(2);
    t.lr = 0.0;
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainResult r = train(train_set, dev_set, t, loss, enc);
    EncoderConfig seeded = enc;
    seeded.seed = derive_seed(t.seed, "init");
    LabelerParams fresh = init_params(seeded, build_vocab(train_set));
    for (const auto& [name, tensor] : fresh.tensors)
        CHECK(r.params.tensor(name).v == tensor.v);
}

TEST_CASE("training improves dev f1 on separable synthetic data") {
    auto [train_set, dev_set] = synth_split(120, 40);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(8);
    TrainResult r = train(train_set, dev_set, t, loss, enc);
    REQUIRE(!r.log.epochs.empty());
    CHECK_FALSE(r.log.aborted);
    EncoderConfig seeded = enc;
    seeded.seed = derive_seed(t.seed, "init");
    LabelerParams fresh = init_params(seeded, build_vocab(train_set));
    double before = model_token_f1(fresh, dev_set, loss);
    double after = model_token_f1(r.params, dev_set, loss);
    CHECK(after > before);
    CHECK(after > 0.6);
    // the returned params reproduce the recorded best epoch score
    CHECK(r.log.best_f1 == doctest::Approx(r.log.epochs[r.log.best_epoch].macro_dev_f1));
}

TEST_CASE("training is reproducible for a fixed seed") {
    auto [train_set, dev_set] = synth_split(60, 20);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(3);
    TrainResult a = train(train_set, dev_set, t, loss, enc);
    TrainResult b = train(train_set, dev_set, t, loss, enc);
    for (const auto& [name, tensor] : a.params.tensors)
        CHECK(b.params.tensor(name).v == tensor.v);
    CHECK(train_log_to_string(a.log) == train_log_to_string(b.log));
}

TEST_CASE("early stopping caps the epoch count") {
    auto [train_set, dev_set] = synth_split(60, 20);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(20);
    t.lr = 0.0;  // dev f1 can never improve after epoch 1
    t.patience = 2;
    TrainResult r = train(train_set, dev_set, t, loss, enc);
    CHECK(r.log.epochs.size() <= 3);
    CHECK(r.log.best_epoch == 0);
}

TEST_CASE("single-domain training filters the corpus") {
    auto [train_set, dev_set] = synth_split(90, 30);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(2);
    t.single_domain = Domain::News;
    TrainResult r = train(train_set, dev_set, t, loss, enc);
    CHECK(!r.log.epochs.empty());
    // a domain absent from the corpus is an error
    t.single_domain = Domain::Other;
    CHECK_THROWS_AS(train(train_set, dev_set, t, loss, enc), Error);
}

TEST_CASE("train config validation") {
    TrainConfig t;
    t.lr = -1.0;
    CHECK_THROWS_AS(t.validate(), Error);
    t = TrainConfig{};
    t.batch_size = 0;
    CHECK_THROWS_AS(t.validate(), Error);
    t = TrainConfig{};
    t.dropout = 1.0;
    CHECK_THROWS_AS(t.validate(), Error);
    t = TrainConfig{};
    t.lr_grid.clear();
    CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("grid search covers the product and picks the best") {
    auto [train_set, dev_set] = synth_split(60, 20);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(2);
    t.lr_grid = {0.0, 0.2};
    t.batch_grid = {16};
    t.dropout_grid = {0.0};
    GridResult g = grid_search(train_set, dev_set, t, loss, enc);
    REQUIRE(g.table.size() == 2);
    CHECK(g.table[0].lr == 0.0);
    CHECK(g.table[1].lr == 0.2);
    // a real learning rate beats lr=0 on separable data
    CHECK(g.table[1].dev_f1 > g.table[0].dev_f1);
    CHECK(g.best.lr == 0.2);
    std::string text = grid_to_string(g);
    CHECK(text.find("lr=") != std::string::npos);

    // singleton grid returns that point
    t.lr_grid = {0.1};
    GridResult one = grid_search(train_set, dev_set, t, loss, enc);
    REQUIRE(one.table.size() == 1);
    CHECK(one.best.lr == 0.1);
}

TEST_CASE("grid search ties resolve to the smallest setting") {
    auto [train_set, dev_set] = synth_split(40, 16);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(1);
    t.lr_grid = {0.0, 0.0};  // identical settings -> identical dev f1
    t.batch_grid = {16, 32};
    t.dropout_grid = {0.0};
    GridResult g = grid_search(train_set, dev_set, t, loss, enc);
    REQUIRE(g.table.size() == 4);
    CHECK(g.best.lr == 0.0);
    CHECK(g.best.batch_size == 16);
}

TEST_CASE("cross domain matrix has one row per source plus multi") {
    auto [train_set, test_set] = synth_split(120, 45);
    LossConfig loss;
    EncoderConfig enc = tiny_encoder(static_cast<int>(build_vocab(train_set).size()));
    TrainConfig t = quick_train(4);
    CrossDomainResult m = cross_domain_eval(train_set, test_set, t, loss, enc);
    REQUIRE(m.rows.size() == 4);  // 3 domains + multi
    CHECK(m.rows.back() == "multi");
    REQUIRE(m.cols.size() == 3);
    REQUIRE(m.token_f1.size() == m.rows.size());
    for (const auto& row : m.token_f1) {
        REQUIRE(row.size() == m.cols.size());
        for (double f : row) {
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
        }
    }
    std::string text = cross_domain_to_string(m);
    CHECK(text.find("multi") != std::string::npos);
}
