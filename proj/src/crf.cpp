#include <algorithm>
#include <cmath>

#include "spanlab/errors.hpp"
#include "spanlab/labeler.hpp"

namespace spanlab {

namespace {

constexpr int L = kNumLabels;

double logsumexp3(const double* a) {
    double m = std::max({a[0], a[1], a[2]});
    if (!std::isfinite(m)) return m;
    return m + std::log(std::exp(a[0] - m) + std::exp(a[1] - m) + std::exp(a[2] - m));
}

void check_finite(const Tensor& emissions) {
    for (double x : emissions.v)
        if (!std::isfinite(x)) throw invalid_error("non-finite emission score");
}

// log-alpha and log-beta recursions; rows are positions, cols labels.
void forward_scores(const Tensor& e, const CrfParams& c, Tensor* la) {
    const int t_len = e.rows;
    *la = Tensor::zeros(t_len, L);
    for (int y = 0; y < L; ++y) la->at(0, y) = c.start[y] + e.at(0, y);
    for (int t = 1; t < t_len; ++t) {
        for (int y = 0; y < L; ++y) {
            double acc[L];
            for (int p = 0; p < L; ++p)
                acc[p] = la->at(t - 1, p) + c.trans[p * L + y];
            la->at(t, y) = logsumexp3(acc) + e.at(t, y);
        }
    }
}

void backward_scores(const Tensor& e, const CrfParams& c, Tensor* lb) {
    const int t_len = e.rows;
    *lb = Tensor::zeros(t_len, L);
    for (int y = 0; y < L; ++y) lb->at(t_len - 1, y) = c.stop[y];
    for (int t = t_len - 2; t >= 0; --t) {
        for (int y = 0; y < L; ++y) {
            double acc[L];
            for (int n = 0; n < L; ++n)
                acc[n] = c.trans[y * L + n] + e.at(t + 1, n) + lb->at(t + 1, n);
            lb->at(t, y) = logsumexp3(acc);
        }
    }
}

}  // namespace

CrfParams constrain_bio_transitions(CrfParams crf) {
    crf.start[static_cast<int>(BioLabel::I_TOXIC)] += kBioForbidden;
    crf.trans[static_cast<int>(BioLabel::O) * L + static_cast<int>(BioLabel::I_TOXIC)] +=
        kBioForbidden;
    return crf;
}

CrfParams crf_from_params(const LabelerParams& p, bool constrain_bio) {
    CrfParams c;
    const Tensor& trans = p.tensor("crf.trans");
    const Tensor& start = p.tensor("crf.start");
    const Tensor& stop = p.tensor("crf.stop");
    for (int i = 0; i < L * L; ++i) c.trans[i] = trans.v[i];
    for (int i = 0; i < L; ++i) {
        c.start[i] = start.v[i];
        c.stop[i] = stop.v[i];
    }
    return constrain_bio ? constrain_bio_transitions(c) : c;
}

double crf_score(const Tensor& e, const CrfParams& c,
                 const std::vector<BioLabel>& labels) {
    if (static_cast<int>(labels.size()) != e.rows)
        throw invalid_error("label/emission length mismatch");
    double s = c.start[static_cast<int>(labels[0])] + e.at(0, static_cast<int>(labels[0]));
    for (std::size_t t = 1; t < labels.size(); ++t) {
        int prev = static_cast<int>(labels[t - 1]);
        int cur = static_cast<int>(labels[t]);
        s += c.trans[prev * L + cur] + e.at(static_cast<int>(t), cur);
    }
    s += c.stop[static_cast<int>(labels.back())];
    return s;
}

double crf_log_partition(const Tensor& e, const CrfParams& c) {
    if (e.rows < 1 || e.cols != L) throw invalid_error("emissions must be T x 3, T >= 1");
    check_finite(e);
    Tensor la;
    forward_scores(e, c, &la);
    double acc[L];
    for (int y = 0; y < L; ++y) acc[y] = la.at(e.rows - 1, y) + c.stop[y];
    return logsumexp3(acc);
}

double crf_nll(const Tensor& e, const CrfParams& c, const std::vector<BioLabel>& gold) {
    return crf_log_partition(e, c) - crf_score(e, c, gold);
}

TagSequence viterbi_decode(const Tensor& e, const CrfParams& c) {
    if (e.rows < 1 || e.cols != L) throw invalid_error("emissions must be T x 3, T >= 1");
    const int t_len = e.rows;
    Tensor best = Tensor::zeros(t_len, L);
    std::vector<int> back(static_cast<std::size_t>(t_len) * L, 0);
    for (int y = 0; y < L; ++y) best.at(0, y) = c.start[y] + e.at(0, y);
    for (int t = 1; t < t_len; ++t) {
        for (int y = 0; y < L; ++y) {
            int arg = 0;
            double mx = best.at(t - 1, 0) + c.trans[0 * L + y];
            for (int p = 1; p < L; ++p) {
                double s = best.at(t - 1, p) + c.trans[p * L + y];
                if (s > mx) {  // strict: ties keep the lowest label index
                    mx = s;
                    arg = p;
                }
            }
            best.at(t, y) = mx + e.at(t, y);
            back[static_cast<std::size_t>(t) * L + y] = arg;
        }
    }
    int last = 0;
    double mx = best.at(t_len - 1, 0) + c.stop[0];
    for (int y = 1; y < L; ++y) {
        double s = best.at(t_len - 1, y) + c.stop[y];
        if (s > mx) {
            mx = s;
            last = y;
        }
    }
    TagSequence out;
    out.labels.resize(t_len);
    out.labels[t_len - 1] = static_cast<BioLabel>(last);
    for (int t = t_len - 1; t > 0; --t) {
        last = back[static_cast<std::size_t>(t) * L + last];
        out.labels[t - 1] = static_cast<BioLabel>(last);
    }
    return out;
}

TagSequence argmax_decode(const Tensor& e) {
    TagSequence out;
    out.labels.resize(e.rows);
    for (int t = 0; t < e.rows; ++t) {
        int arg = 0;
        for (int y = 1; y < L; ++y)
            if (e.at(t, y) > e.at(t, arg)) arg = y;
        out.labels[t] = static_cast<BioLabel>(arg);
    }
    return out;
}

void crf_marginals(const Tensor& e, const CrfParams& c, Tensor* unary) {
    check_finite(e);
    Tensor la, lb;
    forward_scores(e, c, &la);
    backward_scores(e, c, &lb);
    double acc[L];
    for (int y = 0; y < L; ++y) acc[y] = la.at(e.rows - 1, y) + c.stop[y];
    const double log_z = logsumexp3(acc);
    *unary = Tensor::zeros(e.rows, L);
    for (int t = 0; t < e.rows; ++t)
        for (int y = 0; y < L; ++y)
            unary->at(t, y) = std::exp(la.at(t, y) + lb.at(t, y) - log_z);
}

double crf_nll_grad(const Tensor& e, const CrfParams& c,
                    const std::vector<BioLabel>& gold, CrfGrad* grad) {
    check_finite(e);
    const int t_len = e.rows;
    Tensor la, lb;
    forward_scores(e, c, &la);
    backward_scores(e, c, &lb);
    double acc[L];
    for (int y = 0; y < L; ++y) acc[y] = la.at(t_len - 1, y) + c.stop[y];
    const double log_z = logsumexp3(acc);

    grad->demissions = Tensor::zeros(t_len, L);
    grad->dtrans.fill(0.0);
    grad->dstart.fill(0.0);
    grad->dstop.fill(0.0);

    // expected counts
    for (int t = 0; t < t_len; ++t)
        for (int y = 0; y < L; ++y)
            grad->demissions.at(t, y) = std::exp(la.at(t, y) + lb.at(t, y) - log_z);
    for (int y = 0; y < L; ++y) {
        grad->dstart[y] = std::exp(la.at(0, y) + lb.at(0, y) - log_z);
        grad->dstop[y] = std::exp(la.at(t_len - 1, y) + c.stop[y] - log_z);
    }
    for (int t = 0; t + 1 < t_len; ++t)
        for (int a = 0; a < L; ++a)
            for (int b = 0; b < L; ++b)
                grad->dtrans[a * L + b] += std::exp(la.at(t, a) + c.trans[a * L + b] +
                                                    e.at(t + 1, b) + lb.at(t + 1, b) -
                                                    log_z);

    // minus empirical counts
    for (int t = 0; t < t_len; ++t)
        grad->demissions.at(t, static_cast<int>(gold[t])) -= 1.0;
    grad->dstart[static_cast<int>(gold[0])] -= 1.0;
    grad->dstop[static_cast<int>(gold[t_len - 1])] -= 1.0;
    for (int t = 0; t + 1 < t_len; ++t)
        grad->dtrans[static_cast<int>(gold[t]) * L + static_cast<int>(gold[t + 1])] -= 1.0;

    return log_z - crf_score(e, c, gold);
}

double crf_toxic_marginal_mean(const Tensor& e, const CrfParams& c, Tensor* demissions) {
    check_finite(e);
    const int t_len = e.rows;
    Tensor la, lb;
    forward_scores(e, c, &la);
    backward_scores(e, c, &lb);
    double acc[L];
    for (int y = 0; y < L; ++y) acc[y] = la.at(t_len - 1, y) + c.stop[y];
    const double log_z = logsumexp3(acc);

    Tensor mu = Tensor::zeros(t_len, L);
    for (int t = 0; t < t_len; ++t)
        for (int y = 0; y < L; ++y)
            mu.at(t, y) = std::exp(la.at(t, y) + lb.at(t, y) - log_z);

    double f = 0.0;
    for (int t = 0; t < t_len; ++t)
        f += mu.at(t, static_cast<int>(BioLabel::B_TOXIC)) +
             mu.at(t, static_cast<int>(BioLabel::I_TOXIC));
    f /= static_cast<double>(t_len);

    if (!demissions) return f;

    // dF/de_s(c') = (1/T) sum_t sum_{c in {B,I}} [P(y_t=c, y_s=c') - mu_t(c) mu_s(c')]
    // Pairwise joints via log-space matrix propagation from each position s.
    *demissions = Tensor::zeros(t_len, L);
    const double inv_t = 1.0 / static_cast<double>(t_len);
    for (int s = 0; s < t_len; ++s) {
        // prop[a][b] = log sum over paths (s,a) -> (t,b) of intermediate scores
        double prop[L][L];
        for (int a = 0; a < L; ++a)
            for (int b = 0; b < L; ++b) prop[a][b] = a == b ? 0.0 : -1e300;
        // t == s contribution
        for (int a = 0; a < L; ++a) {
            bool tox = a != static_cast<int>(BioLabel::O);
            if (tox)
                demissions->at(s, a) += inv_t * (mu.at(s, a) - mu.at(s, a) * mu.at(s, a));
            for (int cc = 0; cc < L; ++cc)
                if (cc != a && a != static_cast<int>(BioLabel::O))
                    demissions->at(s, cc) += inv_t * (0.0 - mu.at(s, a) * mu.at(s, cc));
        }
        for (int t = s + 1; t < t_len; ++t) {
            // advance prop one step
            double next[L][L];
            for (int a = 0; a < L; ++a) {
                for (int b = 0; b < L; ++b) {
                    double best = -1e300;
                    double terms[L];
                    for (int m = 0; m < L; ++m) {
                        terms[m] = prop[a][m] + c.trans[m * L + b];
                        best = std::max(best, terms[m]);
                    }
                    double sum = 0.0;
                    for (int m = 0; m < L; ++m) sum += std::exp(terms[m] - best);
                    next[a][b] = best + std::log(sum) + e.at(t, b);
                }
            }
            for (int a = 0; a < L; ++a)
                for (int b = 0; b < L; ++b) prop[a][b] = next[a][b];
            // joint P(y_s=a, y_t=b) = alpha_s(a) + prop[a][b] + beta_t(b) - logZ
            for (int b = 0; b < L; ++b) {
                for (int a = 0; a < L; ++a) {
                    double joint =
                        std::exp(la.at(s, a) + prop[a][b] + lb.at(t, b) - log_z);
                    // contribution of target marginal at t (toxic b) to de at s (label a)
                    if (b != static_cast<int>(BioLabel::O))
                        demissions->at(s, a) += inv_t * (joint - mu.at(t, b) * mu.at(s, a));
                    // contribution of target marginal at s (toxic a) to de at t (label b)
                    if (a != static_cast<int>(BioLabel::O))
                        demissions->at(t, b) += inv_t * (joint - mu.at(s, a) * mu.at(t, b));
                }
            }
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Softmax-head losses

double softmax_nll(const Tensor& e, const std::vector<BioLabel>& gold,
                   const LossConfig& cfg, Tensor* demissions) {
    if (static_cast<int>(gold.size()) != e.rows)
        throw invalid_error("gold/emission length mismatch");
    cfg.validate();
    if (demissions) *demissions = Tensor::zeros(e.rows, L);
    double loss = 0.0;
    for (int t = 0; t < e.rows; ++t) {
        double row[L] = {e.at(t, 0), e.at(t, 1), e.at(t, 2)};
        double lse = logsumexp3(row);
        int g = static_cast<int>(gold[t]);
        double w = cfg.weights[g];
        loss += w * (lse - row[g]);
        if (demissions) {
            for (int c = 0; c < L; ++c) {
                double p = std::exp(row[c] - lse);
                demissions->at(t, c) += w * (p - (c == g ? 1.0 : 0.0));
            }
        }
    }
    return loss;
}

double focal_loss(const Tensor& e, const std::vector<BioLabel>& gold,
                  const LossConfig& cfg, Tensor* demissions) {
    if (static_cast<int>(gold.size()) != e.rows)
        throw invalid_error("gold/emission length mismatch");
    cfg.validate();
    if (demissions) *demissions = Tensor::zeros(e.rows, L);
    const double g_exp = cfg.gamma;
    double loss = 0.0;
    for (int t = 0; t < e.rows; ++t) {
        double row[L] = {e.at(t, 0), e.at(t, 1), e.at(t, 2)};
        double lse = logsumexp3(row);
        int g = static_cast<int>(gold[t]);
        double alpha = cfg.weights[g];
        double logp = row[g] - lse;
        double p = std::exp(logp);
        double q = 1.0 - p;
        double focus = g_exp == 0.0 ? 1.0 : std::pow(q, g_exp);
        loss += alpha * focus * (-logp);
        if (demissions) {
            // dl/dp, guarded at p -> 1 where the limit is -(1-p)^gamma / p -> 0
            double dldp;
            if (g_exp == 0.0) {
                dldp = -1.0 / p;
            } else if (q <= 0.0) {
                dldp = 0.0;
            } else {
                dldp = -g_exp * std::pow(q, g_exp - 1.0) * (-logp) - focus / p;
            }
            dldp *= alpha;
            for (int c = 0; c < L; ++c) {
                double pc = std::exp(row[c] - lse);
                double dpde = p * ((c == g ? 1.0 : 0.0) - pc);
                demissions->at(t, c) += dldp * dpde;
            }
        }
    }
    return loss;
}

std::array<double, 3> class_weights(std::size_t n_o, std::size_t n_b, std::size_t n_i) {
    if (n_o == 0 || n_b == 0 || n_i == 0)
        throw invalid_error(
            "class_weights: zero label count; add smoothing counts via config "
            "or use fixed loss.weights");
    const double n = static_cast<double>(n_o + n_b + n_i);
    return {n / (3.0 * static_cast<double>(n_o)), n / (3.0 * static_cast<double>(n_b)),
            n / (3.0 * static_cast<double>(n_i))};
}

void LossConfig::validate() const {
    for (double w : weights)
        if (!(w > 0.0)) throw invalid_error("loss weights must be positive");
    if (gamma < 0.0) throw invalid_error("focal gamma must be >= 0");
}

}  // namespace spanlab
