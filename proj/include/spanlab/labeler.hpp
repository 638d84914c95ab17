#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spanlab/corpus.hpp"

namespace spanlab {

enum class EncoderKind { EmbedBiRecurrent, EmbedSelfAttention };

struct EncoderConfig {
    EncoderKind kind = EncoderKind::EmbedBiRecurrent;
    int vocab_size = 0;
    int embed_dim = 32;
    int hidden_dim = 64;
    int attention_heads = 4;
    double dropout_rate = 0.0;
    std::uint64_t seed = 42;

    void validate() const;
};

// Row-major dense matrix of doubles; vectors are 1 x n.
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    static Tensor zeros(int r, int c) { return {r, c, std::vector<double>(static_cast<std::size_t>(r) * c, 0.0)}; }
    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return v.size(); }
};

// Reserved vocabulary slots.
inline constexpr int kUnkIndex = 0;
inline constexpr int kMaskIndex = 1;

inline constexpr int kNumLabels = 3;  // O, B-TOXIC, I-TOXIC

struct LabelerParams {
    EncoderConfig config;
    std::uint32_t version = 1;
    std::vector<std::string> vocab;  // index 0 is <UNK>, 1 is the mask token
    std::map<std::string, Tensor> tensors;

    const Tensor& tensor(const std::string& name) const;
    Tensor& tensor(const std::string& name);
};

// Seeded initialization: weights uniform in +-1/sqrt(fan_in), transitions zero.
LabelerParams init_params(const EncoderConfig& cfg, const std::vector<std::string>& vocab);

// Versioned binary container: magic, version, config, vocab, named tensors
// with shape headers, little-endian 64-bit floats.
void save_params(const LabelerParams& p, const std::string& path);
LabelerParams load_params(const std::string& path);

std::vector<int> tokens_to_ids(const LabelerParams& p, const std::vector<Token>& tokens);

// ---------------------------------------------------------------------------
// Encoder

struct EncodeCache {
    std::vector<int> tokens;
    Tensor x;       // T x D input embeddings (after dropout when training)
    Tensor hidden;  // T x H
    Tensor emissions;  // T x 3
    // recurrent internals
    Tensor hf, hb;  // T x H/2 each
    // attention internals
    Tensor q, k, vproj, ctx;           // T x H
    std::vector<Tensor> attention;     // per head, T x T rows summing to 1
    // dropout masks (training mode)
    std::vector<double> drop_x, drop_h;
};

// Deterministic given params and input; out-of-vocabulary ids are the
// caller's concern (tokens_to_ids maps them to UNK).
EncodeCache encode(const LabelerParams& p, const std::vector<int>& token_ids,
                   bool training = false, std::mt19937_64* rng = nullptr);

// Same forward pass but with externally supplied input embeddings (T x D);
// used by path-integral attribution.
EncodeCache encode_embedded(const LabelerParams& p, const Tensor& x);

// Backpropagates d(loss)/d(emissions) through the emission projection and
// encoder. Accumulates into `grads` tensors (same names/shapes as params)
// when non-null; writes d/d(input embeddings) into dx when non-null.
void encoder_backward(const LabelerParams& p, const EncodeCache& cache,
                      const Tensor& demissions,
                      std::map<std::string, Tensor>* grads, Tensor* dx);

// Same, but starting from d(loss)/d(hidden states); used by heads that read
// the hidden states directly instead of the emission scores.
void encoder_backward_hidden(const LabelerParams& p, const EncodeCache& cache,
                             const Tensor& dhidden,
                             std::map<std::string, Tensor>* grads, Tensor* dx);

// ---------------------------------------------------------------------------
// Linear-chain CRF over {O, B, I} with virtual START and STOP.

struct CrfParams {
    std::array<double, 9> trans{};  // trans[from*3+to]
    std::array<double, 3> start{};
    std::array<double, 3> stop{};
};

// Additive log-space sentinel used to forbid START->I and O->I.
inline constexpr double kBioForbidden = -1e4;

CrfParams crf_from_params(const LabelerParams& p, bool constrain_bio);
CrfParams constrain_bio_transitions(CrfParams crf);

double crf_score(const Tensor& emissions, const CrfParams& crf,
                 const std::vector<BioLabel>& labels);
// Forward algorithm in log space (log-sum-exp).
double crf_log_partition(const Tensor& emissions, const CrfParams& crf);
double crf_nll(const Tensor& emissions, const CrfParams& crf,
               const std::vector<BioLabel>& gold);
// Ties broken toward the lowest label index (O < B < I) at each backpointer.
TagSequence viterbi_decode(const Tensor& emissions, const CrfParams& crf);
// Per-token argmax over emissions alone; the unconstrained baseline that can
// emit invalid BIO sequences.
TagSequence argmax_decode(const Tensor& emissions);

struct CrfGrad {
    Tensor demissions;  // T x 3
    std::array<double, 9> dtrans{};
    std::array<double, 3> dstart{};
    std::array<double, 3> dstop{};
};

// Gradient of the NLL: expected counts under the model minus gold counts.
double crf_nll_grad(const Tensor& emissions, const CrfParams& crf,
                    const std::vector<BioLabel>& gold, CrfGrad* grad);

// Posterior marginals P(y_t = c); unary is T x 3.
void crf_marginals(const Tensor& emissions, const CrfParams& crf, Tensor* unary);

// Mean over tokens of P(y_t in {B, I}); optionally its gradient w.r.t. the
// emissions (via pairwise joint marginals).
double crf_toxic_marginal_mean(const Tensor& emissions, const CrfParams& crf,
                               Tensor* demissions = nullptr);

// ---------------------------------------------------------------------------
// Losses

enum class LossKind { CrfNll, SoftmaxNllWeighted, FocalLoss };

struct LossConfig {
    LossKind kind = LossKind::CrfNll;
    std::array<double, 3> weights{1.0, 1.0, 1.0};
    double gamma = 2.0;
    bool derived_weights = true;
    bool constrain_bio = true;

    void validate() const;
};

double softmax_nll(const Tensor& emissions, const std::vector<BioLabel>& gold,
                   const LossConfig& cfg, Tensor* demissions = nullptr);
double focal_loss(const Tensor& emissions, const std::vector<BioLabel>& gold,
                  const LossConfig& cfg, Tensor* demissions = nullptr);

// Inverse-frequency class weights w_i = N / (3 n_i); zero counts rejected.
std::array<double, 3> class_weights(std::size_t n_o, std::size_t n_b, std::size_t n_i);

// ---------------------------------------------------------------------------
// Full backward pass

using Gradients = std::map<std::string, Tensor>;

Gradients zero_gradients(const LabelerParams& p);

// Loss and analytic gradient for one sequence, accumulated into `grads`
// scaled by `scale`. Throws on non-finite values, naming the parameter.
double loss_and_gradients(const LabelerParams& p, const std::vector<int>& token_ids,
                          const std::vector<BioLabel>& gold, const LossConfig& cfg,
                          Gradients* grads, double scale = 1.0,
                          bool training = false, std::mt19937_64* rng = nullptr);

// Decode one sequence with the configured head.
TagSequence predict(const LabelerParams& p, const std::vector<int>& token_ids,
                    const LossConfig& cfg);

// Post-level toxicity score F used by attribution: mean toxic CRF marginal
// for the CRF head, mean toxic softmax mass otherwise. Gradient w.r.t. the
// supplied input embeddings is written to dx when non-null.
double toxicity_score(const LabelerParams& p, const Tensor& x, const LossConfig& cfg,
                      Tensor* dx = nullptr);

}  // namespace spanlab
