#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spanlab/labeler.hpp"

namespace spanlab {

struct TrainConfig {
    std::vector<double> lr_grid{1e-5, 3e-5, 5e-5};
    std::vector<int> batch_grid{16, 32};
    std::vector<double> dropout_grid{0.1, 0.3};
    // values used by a single train() run
    double lr = 3e-5;
    int batch_size = 32;
    double dropout = 0.1;
    int max_epochs = 20;
    int patience = 5;
    double momentum = 0.9;
    double clip_norm = 5.0;
    std::uint64_t seed = 42;
    bool domain_weighting = true;
    std::optional<Domain> single_domain;

    void validate() const;
};

// w_d proportional to 1/|D_d|, normalized to sum 1.
struct DomainWeights {
    std::map<Domain, double> w;
};
DomainWeights domain_weights(const std::map<Domain, std::size_t>& counts);

// Index batches with per-batch uniform domain composition; smaller domains
// resample with replacement. Deterministic per seed.
using Batch = std::vector<std::size_t>;
std::vector<Batch> balanced_batches(const Corpus& corpus, int batch_size,
                                    std::uint64_t seed);

struct EpochLog {
    int epoch = 0;
    double loss = 0.0;  // mean domain-weighted batch loss
    std::map<std::string, double> dev_f1;  // per domain
    double macro_dev_f1 = 0.0;
};

struct TrainLog {
    std::vector<EpochLog> epochs;
    int best_epoch = -1;
    double best_f1 = 0.0;
    bool aborted = false;  // non-finite loss; best checkpoint still returned
};

struct TrainResult {
    LabelerParams params;
    TrainLog log;
};

// First-occurrence vocabulary with <UNK> at 0 and <MASK> at 1.
std::vector<std::string> build_vocab(const Corpus& corpus);

// SGD with momentum and global-norm clipping; early stops on macro dev
// token-F1 with the configured patience; returns the best-dev checkpoint.
TrainResult train(const Corpus& train_set, const Corpus& dev_set,
                  const TrainConfig& cfg, const LossConfig& loss_cfg,
                  const EncoderConfig& encoder_cfg);

// Binary-toxic micro token F1 of the model on a labeled corpus.
double model_token_f1(const LabelerParams& p, const Corpus& corpus,
                      const LossConfig& loss_cfg);

struct GridEntry {
    double lr = 0.0;
    int batch_size = 0;
    double dropout = 0.0;
    double dev_f1 = 0.0;
    int best_epoch = -1;
};

struct GridResult {
    std::vector<GridEntry> table;  // exhaustive grid product, lr-major order
    TrainConfig best;              // ties: smaller lr, then batch, then dropout
};

GridResult grid_search(const Corpus& train_set, const Corpus& dev_set,
                       const TrainConfig& cfg, const LossConfig& loss_cfg,
                       const EncoderConfig& encoder_cfg);

struct CrossDomainResult {
    std::vector<std::string> rows;  // training domains, then "multi"
    std::vector<std::string> cols;  // test domains
    std::vector<std::vector<double>> token_f1;
};

// One model per source domain plus a multi-domain model, each evaluated on
// every domain's slice of the shared test split.
CrossDomainResult cross_domain_eval(const Corpus& train_set, const Corpus& test_set,
                                    const TrainConfig& cfg, const LossConfig& loss_cfg,
                                    const EncoderConfig& encoder_cfg);

std::string train_log_to_string(const TrainLog& log);
std::string grid_to_string(const GridResult& g);
std::string cross_domain_to_string(const CrossDomainResult& m);

}  // namespace spanlab
