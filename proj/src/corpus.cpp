#include "spanlab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spanlab/errors.hpp"
#include "spanlab/unicode.hpp"

namespace spanlab {

BioLabel bio_from_string(const std::string& s) {
    if (s == "O") return BioLabel::O;
    if (s == "B-TOXIC" || s == "B") return BioLabel::B_TOXIC;
    if (s == "I-TOXIC" || s == "I") return BioLabel::I_TOXIC;
    throw parse_error("unknown BIO label: " + s);
}

std::string bio_to_string(BioLabel l) {
    switch (l) {
        case BioLabel::O: return "O";
        case BioLabel::B_TOXIC: return "B-TOXIC";
        default: return "I-TOXIC";
    }
}

bool TagSequence::valid() const {
    BioLabel prev = BioLabel::O;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == BioLabel::I_TOXIC &&
            (i == 0 || prev == BioLabel::O))
            return false;
        prev = labels[i];
    }
    return true;
}

bool Post::has_toxic_token() const {
    if (!gold) return false;
    for (BioLabel l : gold->labels)
        if (l != BioLabel::O) return true;
    return false;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

void finish_post(Post& post, std::vector<std::vector<BioLabel>>& annot_cols,
                 bool has_gold, Corpus& corpus, int lineno,
                 const std::string& origin) {
    if (post.tokens.empty() && post.id.empty()) return;
    if (has_gold) {
        TagSequence gold;
        gold.labels = std::move(annot_cols[0]);
        if (gold.labels.size() != post.tokens.size())
            throw parse_error(origin + ":" + std::to_string(lineno) +
                              ": label/token count mismatch for post " + post.id);
        post.gold = std::move(gold);
    }
    for (std::size_t a = 1; a < annot_cols.size(); ++a) {
        TagSequence seq;
        seq.labels = std::move(annot_cols[a]);
        post.annotator_labels["a" + std::to_string(a + 1)] = std::move(seq);
    }
    if (post.normalized_text.empty() && !post.tokens.empty()) {
        // Reconstruct with single-space separators from token offsets.
        std::u32string text;
        for (const auto& tok : post.tokens) {
            while (static_cast<int>(text.size()) < tok.char_start) text.push_back(U' ');
            text += unicode::decode_utf8(tok.surface);
        }
        post.normalized_text = unicode::encode_utf8(text);
    }
    corpus.posts.push_back(std::move(post));
    post = Post{};
    annot_cols.clear();
}

}  // namespace

Corpus corpus_from_string(const std::string& text, const std::string& origin) {
    Corpus corpus;
    Post post;
    std::vector<std::vector<BioLabel>> annot_cols;
    bool has_gold = true;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            finish_post(post, annot_cols, has_gold, corpus, lineno, origin);
            has_gold = true;
            continue;
        }
        if (line[0] == '#') {
            std::size_t sp = line.find(' ');
            std::string key = line.substr(0, sp);
            std::string val = sp == std::string::npos ? "" : line.substr(sp + 1);
            if (key == "#id") post.id = val;
            else if (key == "#domain") post.domain = domain_from_string(val);
            else if (key == "#category") post.category = val;
            else if (key == "#text") post.normalized_text = val;
            // unknown header lines are ignored
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() < 4)
            throw parse_error(origin + ":" + std::to_string(lineno) +
                              ": expected surface<TAB>start<TAB>end<TAB>label");
        Token tok;
        tok.surface = cols[0];
        try {
            tok.char_start = std::stoi(cols[1]);
            tok.char_end = std::stoi(cols[2]);
        } catch (const std::exception&) {
            throw parse_error(origin + ":" + std::to_string(lineno) +
                              ": non-numeric offset");
        }
        if (tok.char_start >= tok.char_end)
            throw parse_error(origin + ":" + std::to_string(lineno) +
                              ": char_start must be < char_end");
        std::size_t n_labels = cols.size() - 3;
        if (annot_cols.empty()) annot_cols.resize(n_labels);
        if (annot_cols.size() != n_labels)
            throw parse_error(origin + ":" + std::to_string(lineno) +
                              ": inconsistent label column count");
        if (cols[3] == "-") {
            if (!post.tokens.empty() && has_gold)
                throw parse_error(origin + ":" + std::to_string(lineno) +
                                  ": mixed missing/present gold labels");
            has_gold = false;
        }
        for (std::size_t a = 0; a < n_labels; ++a) {
            if (a == 0 && !has_gold) continue;
            try {
                annot_cols[a].push_back(bio_from_string(cols[3 + a]));
            } catch (const Error&) {
                throw parse_error(origin + ":" + std::to_string(lineno) +
                                  ": unknown label '" + cols[3 + a] + "'");
            }
        }
        post.tokens.push_back(std::move(tok));
    }
    finish_post(post, annot_cols, has_gold, corpus, lineno, origin);
    return corpus;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return corpus_from_string(ss.str(), path);
}

std::string corpus_to_string(const Corpus& corpus) {
    std::string out;
    bool first = true;
    for (const auto& post : corpus.posts) {
        if (!first) out += '\n';
        first = false;
        out += "#id " + post.id + '\n';
        out += "#domain " + domain_to_string(post.domain) + '\n';
        if (!post.category.empty()) out += "#category " + post.category + '\n';
        if (!post.normalized_text.empty())
            out += "#text " + post.normalized_text + '\n';
        for (std::size_t t = 0; t < post.tokens.size(); ++t) {
            const Token& tok = post.tokens[t];
            out += tok.surface;
            out += '\t' + std::to_string(tok.char_start);
            out += '\t' + std::to_string(tok.char_end);
            out += '\t';
            out += post.gold ? bio_to_string(post.gold->labels[t]) : "-";
            for (const auto& [id, seq] : post.annotator_labels)
                out += '\t' + bio_to_string(seq.labels[t]);
            out += '\n';
        }
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    out << corpus_to_string(corpus);
    if (!out) throw io_error("write failed: " + path);
}

std::vector<RawText> load_raw_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open JSONL file: " + path);
    std::vector<RawText> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        RawText r;
        r.source_id = j.value("id", std::string{});
        r.domain = domain_from_string(j.value("domain", std::string{"other"}));
        if (!j.contains("text"))
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": missing 'text' field");
        r.content = j["text"].get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

CharSpanSet spans_from_tags(const std::vector<Token>& tokens, const TagSequence& tags) {
    if (tokens.size() != tags.size())
        throw invalid_error("token/tag length mismatch");
    CharSpanSet set;
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (tags.labels[i] == BioLabel::O) {
            ++i;
            continue;
        }
        // maximal toxic run; orphan I-TOXIC starts a run
        std::size_t j = i;
        while (j + 1 < tokens.size() && tags.labels[j + 1] != BioLabel::O &&
               !(tags.labels[j + 1] == BioLabel::B_TOXIC))
            ++j;
        // run covers tokens [i, j]; fill all chars incl. interior gaps
        for (int c = tokens[i].char_start; c < tokens[j].char_end; ++c) set.insert(c);
        i = j + 1;
    }
    return set;
}

SplitResult stratified_split(const Corpus& corpus, const SplitSpec& spec) {
    double sum = spec.train_frac + spec.dev_frac + spec.test_frac;
    if (std::abs(sum - 1.0) > 1e-9)
        throw invalid_error("split fractions must sum to 1");

    auto cell_key = [&](const Post& p) {
        std::string key;
        if (spec.stratify_domain) key += domain_to_string(p.domain);
        key += '|';
        if (spec.stratify_toxicity) key += p.has_toxic_token() ? "toxic" : "nontoxic";
        return key;
    };

    std::map<std::string, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < corpus.posts.size(); ++i)
        cells[cell_key(corpus.posts[i])].push_back(i);

    std::vector<int> assignment(corpus.posts.size(), 0);
    for (auto& [key, idx] : cells) {
        if (idx.size() < 3)
            throw invalid_error("stratification cell '" + key + "' has only " +
                                std::to_string(idx.size()) + " posts (need >= 3)");
        std::mt19937_64 rng(spec.seed ^ derive_seed(0x5eed, key));
        std::shuffle(idx.begin(), idx.end(), rng);

        const double fracs[3] = {spec.train_frac, spec.dev_frac, spec.test_frac};
        std::size_t counts[3];
        double rema[3];
        std::size_t used = 0;
        for (int s = 0; s < 3; ++s) {
            double target = fracs[s] * static_cast<double>(idx.size());
            counts[s] = static_cast<std::size_t>(std::floor(target));
            rema[s] = target - std::floor(target);
            used += counts[s];
        }
        // largest-remainder rounding; ties broken train < dev < test
        while (used < idx.size()) {
            int best = 0;
            for (int s = 1; s < 3; ++s)
                if (rema[s] > rema[best]) best = s;
            ++counts[best];
            rema[best] = -1;
            ++used;
        }
        std::size_t pos = 0;
        for (int s = 0; s < 3; ++s)
            for (std::size_t k = 0; k < counts[s]; ++k) assignment[idx[pos++]] = s;
    }

    SplitResult out;
    for (std::size_t i = 0; i < corpus.posts.size(); ++i) {
        switch (assignment[i]) {
            case 0: out.train.posts.push_back(corpus.posts[i]); break;
            case 1: out.dev.posts.push_back(corpus.posts[i]); break;
            default: out.test.posts.push_back(corpus.posts[i]); break;
        }
    }
    return out;
}

CorpusStats compute_stats(const Corpus& corpus) {
    CorpusStats s;
    s.total_posts = corpus.posts.size();
    if (corpus.posts.empty()) return s;

    std::map<Domain, std::pair<std::size_t, std::size_t>> dom;  // (total, toxic)
    std::vector<double> lens;
    std::vector<double> span_lens;
    std::size_t multi = 0;
    for (const auto& post : corpus.posts) {
        auto& [total, toxic] = dom[post.domain];
        ++total;
        if (post.has_toxic_token()) ++toxic;
        lens.push_back(static_cast<double>(post.tokens.size()));
        if (post.gold) {
            const auto& labels = post.gold->labels;
            for (BioLabel l : labels) ++s.label_counts[static_cast<int>(l)];
            std::size_t spans_here = 0;
            std::size_t i = 0;
            while (i < labels.size()) {
                if (labels[i] == BioLabel::O) {
                    ++i;
                    continue;
                }
                // B always starts a dense run; orphan I does too
                std::size_t j = i;
                while (j + 1 < labels.size() && labels[j + 1] == BioLabel::I_TOXIC)
                    ++j;
                span_lens.push_back(static_cast<double>(j - i + 1));
                ++spans_here;
                i = j + 1;
            }
            if (spans_here >= 2) ++multi;
        }
    }
    for (const auto& [d, counts] : dom) {
        CorpusStats::DomainRow row;
        row.domain = d;
        row.samples = counts.first;
        row.toxic_pct = 100.0 * static_cast<double>(counts.second) /
                        static_cast<double>(counts.first);
        row.nontoxic_pct = 100.0 - row.toxic_pct;
        s.per_domain.push_back(row);
    }
    auto summarize = [](const std::vector<double>& v, double& mean, double& mn,
                        double& mx) {
        if (v.empty()) return;
        mean = 0;
        mn = v[0];
        mx = v[0];
        for (double x : v) {
            mean += x;
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        mean /= static_cast<double>(v.size());
    };
    summarize(lens, s.mean_len, s.min_len, s.max_len);
    summarize(span_lens, s.mean_span, s.min_span, s.max_span);
    s.multi_span_fraction =
        static_cast<double>(multi) / static_cast<double>(corpus.posts.size());
    return s;
}

std::string stats_to_string(const CorpusStats& s) {
    std::ostringstream out;
    out << "posts=" << s.total_posts << '\n';
    for (const auto& row : s.per_domain) {
        out << "domain." << domain_to_string(row.domain)
            << ".samples=" << row.samples << '\n';
        out << "domain." << domain_to_string(row.domain) << ".toxic_pct="
            << row.toxic_pct << '\n';
        out << "domain." << domain_to_string(row.domain) << ".nontoxic_pct="
            << row.nontoxic_pct << '\n';
    }
    out << "post_len.mean=" << s.mean_len << " min=" << s.min_len
        << " max=" << s.max_len << '\n';
    out << "toxic_span_len.mean=" << s.mean_span << " min=" << s.min_span
        << " max=" << s.max_span << '\n';
    out << "multi_span_fraction=" << s.multi_span_fraction << '\n';
    out << "labels.O=" << s.label_counts[0] << " B=" << s.label_counts[1]
        << " I=" << s.label_counts[2] << '\n';
    return out.str();
}

}  // namespace spanlab
