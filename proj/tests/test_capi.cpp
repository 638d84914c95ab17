#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "spanlab/spanlab.h"

namespace {

// take ownership of a returned char* and hand back a std::string
std::string take(char* s) {
    std::string out = s ? s : "";
    sl_string_free(s);
    return out;
}

struct ConfigHandle {
    sl_config* c = nullptr;
    ConfigHandle() { REQUIRE(sl_config_create(&c) == SL_OK); }
    ~ConfigHandle() { sl_config_free(c); }
};

struct CorpusHandle {
    sl_corpus* c = nullptr;
    ~CorpusHandle() { sl_corpus_free(c); }
};

struct ModelHandle {
    sl_model* m = nullptr;
    ~ModelHandle() { sl_model_free(m); }
};

void make_small_synth(const ConfigHandle& cfg, const char* path) {
    REQUIRE(sl_config_set(cfg.c, "synth.posts", "60") == SL_OK);
    REQUIRE(sl_config_set(cfg.c, "synth.lexicon_size", "9") == SL_OK);
    char* summary = nullptr;
    REQUIRE(sl_synth(cfg.c, path, &summary) == SL_OK);
    CHECK(take(summary).find("60 posts") != std::string::npos);
}

}  // namespace

TEST_CASE("config lifecycle and error statuses") {
    ConfigHandle cfg;
    CHECK(sl_config_set(cfg.c, "train.lr", "0.05") == SL_OK);
    std::string dump = [&] {
        char* s = nullptr;
        REQUIRE(sl_config_dump(cfg.c, &s) == SL_OK);
        return take(s);
    }();
    CHECK(dump.find("train.lr = 0.05") != std::string::npos);

    CHECK(sl_config_load_file(cfg.c, "no-such.conf") == SL_ERR_IO);
    CHECK(std::string(sl_last_error()).find("no-such.conf") != std::string::npos);

    // malformed config file is a config error
    const char* bad = "test_capi_bad.conf";
    std::ofstream(bad) << "not a key value line\n";
    CHECK(sl_config_load_file(cfg.c, bad) == SL_ERR_CONFIG);
    std::remove(bad);

    // null handle is invalid
    CHECK(sl_config_set(nullptr, "k", "v") == SL_ERR_INVALID);
    CHECK(sl_config_dump(cfg.c, nullptr) == SL_ERR_INVALID);
}

TEST_CASE("corpus load save and parse errors") {
    CHECK(sl_corpus_load("missing.tsv", nullptr) == SL_ERR_INVALID);
    CorpusHandle missing;
    CHECK(sl_corpus_load("missing.tsv", &missing.c) == SL_ERR_IO);

    const char* bad = "test_capi_bad.tsv";
    std::ofstream(bad) << "#id x\nword\t0\t4\tQ\n";
    CorpusHandle parsed;
    CHECK(sl_corpus_load(bad, &parsed.c) == SL_ERR_PARSE);
    CHECK(std::string(sl_last_error()).find(bad) != std::string::npos);
    std::remove(bad);

    const char* good = "test_capi_good.tsv";
    std::ofstream(good) << "#id x\n#domain news\nword\t0\t4\tO\nmore\t5\t9\tB-TOXIC\n";
    CorpusHandle c;
    REQUIRE(sl_corpus_load(good, &c.c) == SL_OK);
    size_t n = 0;
    CHECK(sl_corpus_size(c.c, &n) == SL_OK);
    CHECK(n == 1);

    const char* copy = "test_capi_copy.tsv";
    REQUIRE(sl_corpus_save(c.c, copy) == SL_OK);
    CorpusHandle back;
    REQUIRE(sl_corpus_load(copy, &back.c) == SL_OK);
    char* r1 = nullptr;
    char* r2 = nullptr;
    REQUIRE(sl_stats(c.c, &r1) == SL_OK);
    REQUIRE(sl_stats(back.c, &r2) == SL_OK);
    CHECK(take(r1) == take(r2));
    std::remove(good);
    std::remove(copy);
}

TEST_CASE("synth stats split round trip") {
    ConfigHandle cfg;
    const char* path = "test_capi_synth.tsv";
    make_small_synth(cfg, path);
    CorpusHandle c;
    REQUIRE(sl_corpus_load(path, &c.c) == SL_OK);
    size_t n = 0;
    REQUIRE(sl_corpus_size(c.c, &n) == SL_OK);
    CHECK(n == 60);

    char* report = nullptr;
    REQUIRE(sl_stats(c.c, &report) == SL_OK);
    CHECK(take(report).find("posts=60") != std::string::npos);

    char* summary = nullptr;
    REQUIRE(sl_split(c.c, cfg.c, "test_capi_split", &summary) == SL_OK);
    take(summary);
    CorpusHandle tr, dv, te;
    REQUIRE(sl_corpus_load("test_capi_split.train", &tr.c) == SL_OK);
    REQUIRE(sl_corpus_load("test_capi_split.dev", &dv.c) == SL_OK);
    REQUIRE(sl_corpus_load("test_capi_split.test", &te.c) == SL_OK);
    size_t a = 0, b = 0, d = 0;
    sl_corpus_size(tr.c, &a);
    sl_corpus_size(dv.c, &b);
    sl_corpus_size(te.c, &d);
    CHECK(a + b + d == 60);
    std::remove(path);
    std::remove("test_capi_split.train");
    std::remove("test_capi_split.dev");
    std::remove("test_capi_split.test");
}

TEST_CASE("train predict eval explain through the c api") {
    ConfigHandle cfg;
    const char* path = "test_capi_train.tsv";
    make_small_synth(cfg, path);
    CorpusHandle c;
    REQUIRE(sl_corpus_load(path, &c.c) == SL_OK);

    REQUIRE(sl_config_set(cfg.c, "train.max_epochs", "4") == SL_OK);
    REQUIRE(sl_config_set(cfg.c, "train.lr", "0.2") == SL_OK);
    REQUIRE(sl_config_set(cfg.c, "encoder.embed_dim", "8") == SL_OK);
    REQUIRE(sl_config_set(cfg.c, "encoder.hidden_dim", "8") == SL_OK);
    const char* model_path = "test_capi_model.bin";
    char* log = nullptr;
    REQUIRE(sl_train(c.c, c.c, cfg.c, model_path, &log) == SL_OK);
    CHECK(take(log).find("best_epoch=") != std::string::npos);

    ModelHandle m;
    REQUIRE(sl_model_load(model_path, &m.m) == SL_OK);

    char* report = nullptr;
    REQUIRE(sl_eval(m.m, c.c, cfg.c, &report) == SL_OK);
    std::string rep = take(report);
    CHECK(rep.find("token_f1=") != std::string::npos);
    CHECK(rep.find("domain") != std::string::npos);

    const char* pred_path = "test_capi_pred.tsv";
    char* summary = nullptr;
    REQUIRE(sl_predict(m.m, c.c, cfg.c, pred_path, &summary) == SL_OK);
    take(summary);
    CorpusHandle preds;
    REQUIRE(sl_corpus_load(pred_path, &preds.c) == SL_OK);
    size_t n = 0;
    sl_corpus_size(preds.c, &n);
    CHECK(n == 60);

    // model file round trip
    const char* model_copy = "test_capi_model2.bin";
    REQUIRE(sl_model_save(m.m, model_copy) == SL_OK);
    ModelHandle m2;
    REQUIRE(sl_model_load(model_copy, &m2.m) == SL_OK);

    char* html = nullptr;
    REQUIRE(sl_explain(m.m, c.c, cfg.c, "spans", "html", &html) == SL_OK);
    CHECK(take(html).find("<html") != std::string::npos);
    char* ansi = nullptr;
    REQUIRE(sl_explain(m.m, c.c, cfg.c, "ig", "ansi", &ansi) == SL_OK);
    CHECK(!take(ansi).empty());
    CHECK(sl_explain(m.m, c.c, cfg.c, "nonsense", "ansi", &ansi) == SL_ERR_CONFIG);
    // attention mode needs the self-attention encoder
    CHECK(sl_explain(m.m, c.c, cfg.c, "attention", "ansi", &ansi) ==
          SL_ERR_UNSUPPORTED);

    CHECK(sl_model_load("missing-model.bin", &m2.m) == SL_ERR_IO);
    std::remove(path);
    std::remove(model_path);
    std::remove(model_copy);
    std::remove(pred_path);
}

TEST_CASE("augment through the c api") {
    ConfigHandle cfg;
    const char* path = "test_capi_aug_in.tsv";
    make_small_synth(cfg, path);
    CorpusHandle c;
    REQUIRE(sl_corpus_load(path, &c.c) == SL_OK);

    REQUIRE(sl_config_set(cfg.c, "augment.mask.enabled", "true") == SL_OK);
    REQUIRE(sl_config_set(cfg.c, "augment.mask.prob", "0.3") == SL_OK);
    const char* out_path = "test_capi_aug_out.tsv";
    char* summary = nullptr;
    REQUIRE(sl_augment(c.c, cfg.c, out_path, &summary) == SL_OK);
    take(summary);
    CorpusHandle out;
    REQUIRE(sl_corpus_load(out_path, &out.c) == SL_OK);
    size_t n = 0;
    sl_corpus_size(out.c, &n);
    CHECK(n == 60);

    // bad augment config surfaces as a config error
    REQUIRE(sl_config_set(cfg.c, "augment.mask.prob", "2.0") == SL_OK);
    CHECK(sl_augment(c.c, cfg.c, out_path, &summary) == SL_ERR_CONFIG);
    std::remove(path);
    std::remove(out_path);
}

TEST_CASE("last error resets on success") {
    ConfigHandle cfg;
    CHECK(sl_config_load_file(cfg.c, "no-such.conf") == SL_ERR_IO);
    CHECK(std::string(sl_last_error()) != "");
    char* s = nullptr;
    REQUIRE(sl_config_dump(cfg.c, &s) == SL_OK);
    take(s);
    CHECK(std::string(sl_last_error()) == "");
}
