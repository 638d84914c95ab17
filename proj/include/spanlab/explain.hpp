#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spanlab/labeler.hpp"

namespace spanlab {

struct AttributionMap {
    std::vector<double> token_scores;  // per token, summed over embedding dims
    double f_input = 0.0;
    double f_baseline = 0.0;
    double completeness_residual = 0.0;  // |sum(attr) - (F(X) - F(X'))|
    int steps = 0;
    std::string baseline;
};

// Differentiable scalar over input embeddings; writes dF/dx when non-null.
using ScalarFn = std::function<double(const Tensor& x, Tensor* dx)>;

// Midpoint-Riemann path integral from `baseline` to `x` with m steps.
AttributionMap integrated_gradients(const ScalarFn& f, const Tensor& x,
                                    const Tensor& baseline, int m);

// Convenience wrapper: F = post-level toxicity score of the model, zero
// baseline unless one is supplied.
AttributionMap integrated_gradients(const LabelerParams& p, const std::vector<int>& token_ids,
                                    const LossConfig& loss_cfg, int m,
                                    const Tensor* baseline = nullptr);

// Token indices whose mean incoming attention (over heads and query
// positions) exceeds the threshold. Self-attention encoder only.
std::vector<int> attention_indicators(const LabelerParams& p,
                                      const std::vector<int>& token_ids,
                                      double threshold = 0.3);

// Mean incoming attention per token.
std::vector<double> mean_incoming_attention(const LabelerParams& p,
                                            const std::vector<int>& token_ids);

// ---------------------------------------------------------------------------
// ARE: weakly supervised rationale extraction (post-level labels only).

enum class GateMode { SoftL1, HardAtInference };

struct RationaleConfig {
    double lambda = 0.1;
    bool use_topk = false;
    int k = 1;
    double tau = 0.5;
    GateMode gate_mode = GateMode::HardAtInference;

    void validate() const;
};

struct AreTrainConfig {
    double lr = 0.05;
    int epochs = 30;
    std::uint64_t seed = 42;
};

// Adds gate and classifier heads ("are.gate.w/b", "are.cls.w/b") on top of
// the encoder and trains with BCE + lambda * mean gate. Post-level labels
// are derived from the gold tags (any toxic token).
LabelerParams are_train(const Corpus& corpus, const RationaleConfig& rcfg,
                        const AreTrainConfig& tcfg, const EncoderConfig& encoder_cfg);

// Per-token gate activations in [0, 1].
std::vector<double> are_gates(const LabelerParams& p, const std::vector<int>& token_ids);

// Hard selection (TopK or Threshold) mapped to BIO by contiguity.
TagSequence are_extract(const LabelerParams& p, const std::vector<int>& token_ids,
                        const RationaleConfig& rcfg);

// ---------------------------------------------------------------------------
// Reports

enum class HighlightFormat { Ansi, Html };

// Equal-width 5-bucket index (0..4) over [min, max]; all-equal scores map to 0.
std::vector<int> attribution_buckets(const std::vector<double>& scores);

std::string render_highlights(const Post& post, const TagSequence& tags,
                              HighlightFormat format);
std::string render_highlights(const Post& post, const AttributionMap& attr,
                              HighlightFormat format);

}  // namespace spanlab
