#include "spanlab/agreement.hpp"

#include <algorithm>
#include <sstream>

#include "spanlab/errors.hpp"

namespace spanlab {

double observed_agreement(const std::vector<BioLabel>& a1,
                          const std::vector<BioLabel>& a2) {
    if (a1.size() != a2.size() || a1.empty())
        throw invalid_error("annotator sequences must be aligned and non-empty");
    std::size_t same = 0;
    for (std::size_t i = 0; i < a1.size(); ++i)
        if (a1[i] == a2[i]) ++same;
    return static_cast<double>(same) / static_cast<double>(a1.size());
}

KappaResult cohen_kappa(const std::vector<BioLabel>& a1,
                        const std::vector<BioLabel>& a2) {
    if (a1.size() != a2.size() || a1.empty())
        throw invalid_error("annotator sequences must be aligned and non-empty");
    const double n = static_cast<double>(a1.size());
    double marg1[3] = {0, 0, 0}, marg2[3] = {0, 0, 0};
    std::size_t same = 0;
    for (std::size_t i = 0; i < a1.size(); ++i) {
        ++marg1[static_cast<int>(a1[i])];
        ++marg2[static_cast<int>(a2[i])];
        if (a1[i] == a2[i]) ++same;
    }
    KappaResult r;
    r.p_o = static_cast<double>(same) / n;
    r.p_e = 0.0;
    for (int c = 0; c < 3; ++c) r.p_e += (marg1[c] / n) * (marg2[c] / n);
    if (r.p_e >= 1.0 - 1e-15)
        throw invalid_error("kappa undefined: expected agreement is 1");
    r.kappa = (r.p_o - r.p_e) / (1.0 - r.p_e);
    return r;
}

double krippendorff_alpha(const std::vector<std::vector<int>>& values) {
    if (values.size() < 2)
        throw invalid_error("krippendorff alpha needs >= 2 annotators");
    const std::size_t n_units = values[0].size();
    for (const auto& row : values)
        if (row.size() != n_units)
            throw invalid_error("annotator rows must have equal length");

    // Observed coincidence matrix: within each unit with m >= 2 values,
    // every ordered pair (c, c') contributes 1/(m-1).
    double o[3][3] = {};
    double n_c[3] = {0, 0, 0};
    double n_total = 0.0;
    bool any_pairable = false;
    for (std::size_t u = 0; u < n_units; ++u) {
        std::vector<int> vals;
        for (const auto& row : values)
            if (row[u] >= 0) vals.push_back(row[u]);
        if (vals.size() < 2) continue;
        any_pairable = true;
        const double m = static_cast<double>(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            n_c[vals[i]] += 1.0;
            n_total += 1.0;
            for (std::size_t j = 0; j < vals.size(); ++j) {
                if (i == j) continue;
                o[vals[i]][vals[j]] += 1.0 / (m - 1.0);
            }
        }
    }
    if (!any_pairable)
        throw invalid_error("no unit has two or more annotations");

    // Expected coincidences: e_cc' = n_c n_c' / (n-1), e_cc = n_c(n_c-1)/(n-1).
    double d_o = 0.0, d_e = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (int cc = 0; cc < 3; ++cc) {
            if (c == cc) continue;  // binary distance: identical labels cost 0
            d_o += o[c][cc];
            d_e += n_c[c] * n_c[cc] / (n_total - 1.0);
        }
    }
    if (d_e == 0.0) return 1.0;  // all values identical
    return 1.0 - d_o / d_e;
}

std::vector<Disagreement> disagreement_report(const Corpus& corpus) {
    std::vector<Disagreement> out;
    for (std::size_t p = 0; p < corpus.posts.size(); ++p) {
        const Post& post = corpus.posts[p];
        if (post.annotator_labels.size() < 2) continue;
        std::vector<const TagSequence*> seqs;
        for (const auto& [id, seq] : post.annotator_labels) seqs.push_back(&seq);
        Disagreement d;
        d.post_id = post.id;
        d.post_index = p;
        for (std::size_t t = 0; t < post.tokens.size(); ++t) {
            bool differ = false;
            for (std::size_t a = 1; a < seqs.size() && !differ; ++a)
                if (seqs[a]->labels[t] != seqs[0]->labels[t]) differ = true;
            if (differ) d.token_positions.push_back(t);
        }
        if (!d.token_positions.empty()) out.push_back(std::move(d));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Disagreement& a, const Disagreement& b) {
                         return a.token_positions.size() > b.token_positions.size();
                     });
    return out;
}

AgreementReport corpus_agreement(const Corpus& corpus) {
    std::vector<BioLabel> a1, a2;
    std::vector<std::vector<int>> all_rows;
    std::size_t max_annotators = 0;
    for (const auto& post : corpus.posts)
        max_annotators = std::max(max_annotators, post.annotator_labels.size());
    if (max_annotators < 2)
        throw invalid_error("corpus has no post with >= 2 annotator sequences");
    all_rows.resize(max_annotators);

    for (const auto& post : corpus.posts) {
        if (post.annotator_labels.size() < 2) continue;
        std::vector<const TagSequence*> seqs;
        for (const auto& [id, seq] : post.annotator_labels) seqs.push_back(&seq);
        for (std::size_t t = 0; t < post.tokens.size(); ++t) {
            a1.push_back(seqs[0]->labels[t]);
            a2.push_back(seqs[1]->labels[t]);
            for (std::size_t a = 0; a < max_annotators; ++a)
                all_rows[a].push_back(a < seqs.size()
                                          ? static_cast<int>(seqs[a]->labels[t])
                                          : -1);
        }
    }
    if (a1.empty())
        throw invalid_error("corpus has no post with >= 2 annotator sequences");

    AgreementReport r;
    try {
        KappaResult k = cohen_kappa(a1, a2);
        r.kappa = k.kappa;
        r.p_o = k.p_o;
        r.p_e = k.p_e;
    } catch (const Error&) {
        r.kappa_defined = false;
        r.p_o = observed_agreement(a1, a2);
        r.p_e = 1.0;
    }
    r.alpha = krippendorff_alpha(all_rows);
    r.disagreements = disagreement_report(corpus);
    return r;
}

std::string agreement_to_string(const AgreementReport& r) {
    std::ostringstream out;
    if (r.kappa_defined)
        out << "kappa=" << r.kappa << '\n';
    else
        out << "kappa=undefined\n";
    out << "alpha=" << r.alpha << '\n';
    out << "p_o=" << r.p_o << '\n';
    out << "p_e=" << r.p_e << '\n';
    out << "disagreeing_posts=" << r.disagreements.size() << '\n';
    for (const auto& d : r.disagreements) {
        out << "post " << d.post_id << ": tokens";
        for (std::size_t t : d.token_positions) out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

}  // namespace spanlab
