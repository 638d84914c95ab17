#pragma once

#include <string>
#include <vector>

#include "spanlab/corpus.hpp"

namespace spanlab {

struct KappaResult {
    double kappa = 0.0;
    double p_o = 0.0;
    double p_e = 0.0;
};

// Cohen's kappa over two aligned label sequences.
// Throws invalid_error when p_e == 1 (kappa undefined); callers wanting
// p_o in that case can compute it via observed_agreement.
KappaResult cohen_kappa(const std::vector<BioLabel>& a1, const std::vector<BioLabel>& a2);

double observed_agreement(const std::vector<BioLabel>& a1, const std::vector<BioLabel>& a2);

// Nominal-data Krippendorff alpha over units x annotators; -1 marks a
// missing value. Units with fewer than two annotations are excluded.
// values[a][u] is annotator a's label for unit u.
double krippendorff_alpha(const std::vector<std::vector<int>>& values);

struct Disagreement {
    std::string post_id;
    std::size_t post_index = 0;
    std::vector<std::size_t> token_positions;
};

// Per-post positions where any two annotators differ, sorted by descending
// disagreement count (ties by post index).
std::vector<Disagreement> disagreement_report(const Corpus& corpus);

struct AgreementReport {
    double kappa = 0.0;
    double alpha = 0.0;
    double p_o = 0.0;
    double p_e = 0.0;
    bool kappa_defined = true;
    std::vector<Disagreement> disagreements;
};

// Token-level agreement over all posts carrying >= 2 annotator sequences.
// Kappa uses the first two annotator columns; alpha uses all of them.
AgreementReport corpus_agreement(const Corpus& corpus);
std::string agreement_to_string(const AgreementReport& r);

}  // namespace spanlab
