// spanlab: toxic span detection toolkit, command-line front end.
// Links the C API only; all heavy lifting happens behind libspanlab.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spanlab/spanlab.h"

namespace {

// Exit codes: 0 ok, 2 bad usage/unknown flag, 3 missing file, 4 config
// conflict, 1 anything else.
int exit_code_for(sl_status s) {
    switch (s) {
        case SL_OK: return 0;
        case SL_ERR_IO: return 3;
        case SL_ERR_CONFIG: return 4;
        default: return 1;
    }
}

struct Cleanup {
    sl_config* cfg = nullptr;
    sl_corpus* input = nullptr;
    sl_corpus* dev = nullptr;
    sl_corpus* test = nullptr;
    sl_model* model = nullptr;
    ~Cleanup() {
        sl_config_free(cfg);
        sl_corpus_free(input);
        sl_corpus_free(dev);
        sl_corpus_free(test);
        sl_model_free(model);
    }
};

int fail(sl_status s) {
    std::fprintf(stderr, "error: %s\n", sl_last_error());
    return exit_code_for(s);
}

bool print_and_free(char* text) {
    if (text) {
        std::fputs(text, stdout);
        if (text[0] && text[std::string(text).size() - 1] != '\n') std::fputc('\n', stdout);
        sl_string_free(text);
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanlab: Urdu toxic span detection toolkit"};
    app.require_subcommand(1);

    std::string config_path, input_path, dev_path, test_path, output_path,
        model_path;
    std::string format = "ansi", mode = "spans", loss, encoder, constrain_bio;
    long long seed = -1;
    std::vector<std::string> overrides;

    app.add_option("--config", config_path, "Config file (key = value lines)");
    app.add_option("--seed", seed, "Run seed (default 42)");
    app.add_option("--set", overrides, "Config override, key=value (repeatable)");

    auto add_io = [&](CLI::App* sub, bool needs_input, bool needs_output) {
        auto* in = sub->add_option("--input", input_path, "Input corpus/file");
        if (needs_input) in->required();
        auto* out = sub->add_option("--output", output_path, "Output path");
        if (needs_output) out->required();
    };
    auto add_model_flags = [&](CLI::App* sub) {
        sub->add_option("--loss", loss, "Loss head: crf|weighted|focal (default crf)")
            ->check(CLI::IsMember({"crf", "weighted", "focal"}));
        sub->add_option("--encoder", encoder,
                        "Encoder: recurrent|attention (default recurrent)")
            ->check(CLI::IsMember({"recurrent", "attention"}));
        sub->add_option("--constrain-bio", constrain_bio,
                        "BIO-constrained decoding: on|off (default on)")
            ->check(CLI::IsMember({"on", "off"}));
    };

    CLI::App* preprocess = app.add_subcommand("preprocess", "Normalize and tokenize raw JSONL posts");
    add_io(preprocess, true, true);

    CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
    add_io(stats, true, false);

    CLI::App* agreement = app.add_subcommand("agreement", "Inter-annotator agreement");
    add_io(agreement, true, false);

    CLI::App* split = app.add_subcommand("split", "Stratified train/dev/test split");
    add_io(split, true, true);

    CLI::App* train = app.add_subcommand("train", "Train a span labeler");
    add_io(train, true, false);
    train->add_option("--dev", dev_path, "Dev corpus")->required();
    train->add_option("--model", model_path, "Model output path")->required();
    add_model_flags(train);

    CLI::App* grid = app.add_subcommand("grid", "Hyperparameter grid search");
    add_io(grid, true, false);
    grid->add_option("--dev", dev_path, "Dev corpus")->required();
    add_model_flags(grid);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a model on a gold corpus");
    add_io(eval, true, false);
    eval->add_option("--model", model_path, "Trained model")->required();
    add_model_flags(eval);

    CLI::App* crossdomain = app.add_subcommand("crossdomain", "Train-domain x test-domain F1 matrix");
    add_io(crossdomain, true, false);
    crossdomain->add_option("--test", test_path, "Test corpus")->required();
    add_model_flags(crossdomain);

    CLI::App* predict = app.add_subcommand("predict", "Tag a corpus with a trained model");
    add_io(predict, true, true);
    predict->add_option("--model", model_path, "Trained model")->required();
    add_model_flags(predict);

    CLI::App* explain = app.add_subcommand("explain", "Attribution and highlight reports");
    add_io(explain, true, false);
    explain->add_option("--model", model_path, "Trained model")->required();
    explain->add_option("--format", format, "Report format: ansi|html|tsv (default ansi)")
        ->check(CLI::IsMember({"ansi", "html", "tsv"}));
    explain->add_option("--mode", mode, "ig|attention|spans (default spans)")
        ->check(CLI::IsMember({"ig", "attention", "spans"}));
    add_model_flags(explain);

    CLI::App* augment = app.add_subcommand("augment", "Label-preserving augmentation");
    add_io(augment, true, true);

    CLI::App* synth = app.add_subcommand("synth", "Generate a planted-lexicon synthetic corpus");
    add_io(synth, false, true);

    // let global flags (--config/--seed/--set) appear after the subcommand
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Cleanup h;
    sl_status s = sl_config_create(&h.cfg);
    if (s != SL_OK) return fail(s);
    if (!config_path.empty() && (s = sl_config_load_file(h.cfg, config_path.c_str())) != SL_OK)
        return fail(s);
    for (const auto& kv : overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", kv.c_str());
            return 2;
        }
        if ((s = sl_config_set(h.cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str())) != SL_OK)
            return fail(s);
    }
    if (seed >= 0 &&
        (s = sl_config_set(h.cfg, "seed", std::to_string(seed).c_str())) != SL_OK)
        return fail(s);
    if (!loss.empty() && (s = sl_config_set(h.cfg, "loss.kind", loss.c_str())) != SL_OK)
        return fail(s);
    if (!encoder.empty() && (s = sl_config_set(h.cfg, "encoder.kind", encoder.c_str())) != SL_OK)
        return fail(s);
    if (!constrain_bio.empty() &&
        (s = sl_config_set(h.cfg, "loss.constrain_bio", constrain_bio.c_str())) != SL_OK)
        return fail(s);
    if (const char* threads = std::getenv("SPANLAB_THREADS"))
        if ((s = sl_config_set(h.cfg, "threads", threads)) != SL_OK) return fail(s);

    auto load_input = [&]() { return sl_corpus_load(input_path.c_str(), &h.input); };
    auto load_model = [&]() { return sl_model_load(model_path.c_str(), &h.model); };

    char* text = nullptr;
    if (preprocess->parsed()) {
        s = sl_preprocess(h.cfg, input_path.c_str(), output_path.c_str(), &text);
    } else if (stats->parsed()) {
        if ((s = load_input()) == SL_OK) s = sl_stats(h.input, &text);
    } else if (agreement->parsed()) {
        if ((s = load_input()) == SL_OK) s = sl_agreement(h.input, &text);
    } else if (split->parsed()) {
        if ((s = load_input()) == SL_OK)
            s = sl_split(h.input, h.cfg, output_path.c_str(), &text);
    } else if (train->parsed()) {
        if ((s = load_input()) == SL_OK &&
            (s = sl_corpus_load(dev_path.c_str(), &h.dev)) == SL_OK)
            s = sl_train(h.input, h.dev, h.cfg, model_path.c_str(), &text);
    } else if (grid->parsed()) {
        if ((s = load_input()) == SL_OK &&
            (s = sl_corpus_load(dev_path.c_str(), &h.dev)) == SL_OK)
            s = sl_grid(h.input, h.dev, h.cfg, &text);
    } else if (eval->parsed()) {
        if ((s = load_model()) == SL_OK && (s = load_input()) == SL_OK)
            s = sl_eval(h.model, h.input, h.cfg, &text);
    } else if (crossdomain->parsed()) {
        if ((s = load_input()) == SL_OK &&
            (s = sl_corpus_load(test_path.c_str(), &h.test)) == SL_OK)
            s = sl_crossdomain(h.input, h.test, h.cfg, &text);
    } else if (predict->parsed()) {
        if ((s = load_model()) == SL_OK && (s = load_input()) == SL_OK)
            s = sl_predict(h.model, h.input, h.cfg, output_path.c_str(), &text);
    } else if (explain->parsed()) {
        if (format == "tsv") {
            std::fprintf(stderr, "error: explain supports ansi and html output\n");
            return 4;
        }
        if ((s = load_model()) == SL_OK && (s = load_input()) == SL_OK)
            s = sl_explain(h.model, h.input, h.cfg, mode.c_str(), format.c_str(), &text);
    } else if (augment->parsed()) {
        if ((s = load_input()) == SL_OK)
            s = sl_augment(h.input, h.cfg, output_path.c_str(), &text);
    } else if (synth->parsed()) {
        s = sl_synth(h.cfg, output_path.c_str(), &text);
    }

    if (s != SL_OK) {
        sl_string_free(text);
        return fail(s);
    }
    print_and_free(text);
    return 0;
}
