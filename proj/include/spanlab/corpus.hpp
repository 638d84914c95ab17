#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spanlab/textproc.hpp"

namespace spanlab {

enum class BioLabel : std::uint8_t { O = 0, B_TOXIC = 1, I_TOXIC = 2 };

BioLabel bio_from_string(const std::string& s);
std::string bio_to_string(BioLabel l);

struct TagSequence {
    std::vector<BioLabel> labels;

    // Well-formed iff no I-TOXIC at position 0 or immediately after O.
    bool valid() const;
    std::size_t size() const { return labels.size(); }
};

struct Post {
    std::string id;
    Domain domain = Domain::Other;
    std::string category;  // optional toxicity category attribute
    std::string normalized_text;  // UTF-8
    std::vector<Token> tokens;
    std::optional<TagSequence> gold;
    std::map<std::string, TagSequence> annotator_labels;

    bool has_toxic_token() const;
};

using CharSpanSet = std::set<int>;

struct SplitSpec {
    double train_frac = 0.8;
    double dev_frac = 0.1;
    double test_frac = 0.1;
    bool stratify_domain = true;
    bool stratify_toxicity = true;
    std::uint64_t seed = 42;
};

struct CorpusStats {
    struct DomainRow {
        Domain domain;
        std::size_t samples = 0;
        double toxic_pct = 0.0;
        double nontoxic_pct = 0.0;
    };
    std::vector<DomainRow> per_domain;
    std::size_t total_posts = 0;
    double mean_len = 0, min_len = 0, max_len = 0;       // post length in tokens
    double mean_span = 0, min_span = 0, max_span = 0;    // dense toxic span length
    double multi_span_fraction = 0.0;
    std::size_t label_counts[3] = {0, 0, 0};  // O, B, I
};

struct Corpus {
    std::vector<Post> posts;

    std::size_t size() const { return posts.size(); }
};

// Token-per-line canonical format; see save_corpus for the exact layout.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);
std::string corpus_to_string(const Corpus& corpus);
Corpus corpus_from_string(const std::string& text, const std::string& origin);

// JSON-lines raw-post input: {"id":..., "domain":..., "text":...} per line.
std::vector<RawText> load_raw_jsonl(const std::string& path);

// Character offsets covered by maximal toxic runs, including inter-token
// whitespace strictly inside a run. Orphan I-TOXIC starts a new run.
CharSpanSet spans_from_tags(const std::vector<Token>& tokens, const TagSequence& tags);

struct SplitResult {
    Corpus train, dev, test;
};
SplitResult stratified_split(const Corpus& corpus, const SplitSpec& spec);

CorpusStats compute_stats(const Corpus& corpus);
std::string stats_to_string(const CorpusStats& s);

}  // namespace spanlab
