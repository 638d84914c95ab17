#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spanlab/errors.hpp"
#include "spanlab/metrics.hpp"

using namespace spanlab;

namespace {

constexpr BioLabel O = BioLabel::O;
constexpr BioLabel B = BioLabel::B_TOXIC;
constexpr BioLabel I = BioLabel::I_TOXIC;

CharSpanSet range(int lo, int hi) {  // inclusive
    CharSpanSet s;
    for (int c = lo; c <= hi; ++c) s.insert(c);
    return s;
}

// bitmap-painting oracle over a fixed character canvas
Prf bitmap_oracle(const CharSpanSet& pred, const CharSpanSet& gold, int canvas) {
    std::vector<bool> p(canvas, false), g(canvas, false);
    for (int c : pred) p[c] = true;
    for (int c : gold) g[c] = true;
    int tp = 0, fp = 0, fn = 0;
    for (int c = 0; c < canvas; ++c) {
        if (p[c] && g[c]) ++tp;
        else if (p[c]) ++fp;
        else if (g[c]) ++fn;
    }
    Prf r;
    if (pred.empty() && gold.empty()) {
        r.precision = r.recall = r.f1 = 1.0;
        return r;
    }
    if (pred.empty() || gold.empty()) return r;
    r.precision = double(tp) / double(tp + fp);
    r.recall = double(tp) / double(tp + fn);
    if (r.precision + r.recall > 0)
        r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

}  // namespace

TEST_CASE("span prf worked case: pred 3..10 vs gold 5..12") {
    Prf r = span_prf(range(3, 10), range(5, 12));
    CHECK(r.precision == doctest::Approx(0.75));
    CHECK(r.recall == doctest::Approx(0.75));
    CHECK(r.f1 == doctest::Approx(0.75));
}

TEST_CASE("span prf empty conventions") {
    Prf both = span_prf({}, {});
    CHECK(both.f1 == doctest::Approx(1.0));
    CHECK(span_prf(range(0, 3), {}).f1 == doctest::Approx(0.0));
    CHECK(span_prf({}, range(0, 3)).f1 == doctest::Approx(0.0));
}

TEST_CASE("span prf matches the bitmap oracle on random cases") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        CharSpanSet pred, gold;
        int canvas = 30;
        int np = static_cast<int>(rng() % 4);
        int ng = static_cast<int>(rng() % 4);
        for (int s = 0; s < np; ++s) {
            int lo = static_cast<int>(rng() % canvas);
            int hi = std::min(canvas - 1, lo + static_cast<int>(rng() % 6));
            for (int c = lo; c <= hi; ++c) pred.insert(c);
        }
        for (int s = 0; s < ng; ++s) {
            int lo = static_cast<int>(rng() % canvas);
            int hi = std::min(canvas - 1, lo + static_cast<int>(rng() % 6));
            for (int c = lo; c <= hi; ++c) gold.insert(c);
        }
        Prf got = span_prf(pred, gold);
        Prf want = bitmap_oracle(pred, gold, canvas);
        CHECK(got.precision == doctest::Approx(want.precision));
        CHECK(got.recall == doctest::Approx(want.recall));
        CHECK(got.f1 == doctest::Approx(want.f1));
    }
}

TEST_CASE("corpus span f1 is a macro average") {
    std::vector<CharSpanSet> preds{range(3, 10), {}};
    std::vector<CharSpanSet> golds{range(5, 12), {}};
    CHECK(corpus_span_f1(preds, golds) == doctest::Approx((0.75 + 1.0) / 2.0));
    CHECK_THROWS_AS(corpus_span_f1({{}}, {}), Error);
}

TEST_CASE("token prf binary toxic micro") {
    std::vector<TagSequence> preds{TagSequence{{O, B, I, O}}};
    std::vector<TagSequence> golds{TagSequence{{O, B, O, B}}};
    // toxic pred {1,2}, gold {1,3}: tp=1 fp=1 fn=1
    Prf r = token_prf(preds, golds);
    CHECK(r.precision == doctest::Approx(0.5));
    CHECK(r.recall == doctest::Approx(0.5));
    CHECK(r.f1 == doctest::Approx(0.5));
}

TEST_CASE("token prf trivially perfect when nothing is toxic") {
    std::vector<TagSequence> all_o{TagSequence{{O, O}}};
    bool trivial = false;
    Prf r = token_prf(all_o, all_o, &trivial);
    CHECK(trivial);
    CHECK(r.f1 == doctest::Approx(1.0));
}

TEST_CASE("token prf rejects misaligned input") {
    CHECK_THROWS_AS(token_prf({TagSequence{{O}}}, {TagSequence{{O, O}}}), Error);
    CHECK_THROWS_AS(token_prf({TagSequence{{O}}}, {}), Error);
}

TEST_CASE("per-class prf counting oracle") {
    std::vector<TagSequence> preds{TagSequence{{O, B, I, B}}};
    std::vector<TagSequence> golds{TagSequence{{O, B, B, I}}};
    auto per = token_prf_per_class(preds, golds);
    REQUIRE(per.size() == 3);
    CHECK(per[0].precision == doctest::Approx(1.0));  // O: tp=1 fp=0
    CHECK(per[1].precision == doctest::Approx(0.5));  // B: tp=1 fp=1 fn=1
    CHECK(per[1].recall == doctest::Approx(0.5));
    CHECK(per[2].precision == doctest::Approx(0.0));  // I: tp=0 fp=1 fn=1
}

TEST_CASE("invalid bio rate") {
    std::vector<TagSequence> seqs{TagSequence{{O, B, I}}, TagSequence{{I, O}},
                                  TagSequence{{O, I}}, TagSequence{{B}}};
    CHECK(invalid_bio_rate(seqs) == doctest::Approx(0.5));
    CHECK(invalid_bio_rate({}) == doctest::Approx(0.0));
}

TEST_CASE("evaluate against a gold corpus with breakdown") {
    Corpus gold;
    auto add = [&](const std::string& id, Domain d, const std::string& cat,
                   std::vector<BioLabel> labels) {
        Post p;
        p.id = id;
        p.domain = d;
        p.category = cat;
        int pos = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            p.tokens.push_back({"w" + std::to_string(i), pos, pos + 2});
            pos += 3;
        }
        p.gold = TagSequence{std::move(labels)};
        gold.posts.push_back(std::move(p));
    };
    add("a", Domain::News, "insult", {O, B, I});
    add("b", Domain::News, "", {O, O});
    add("c", Domain::YouTube, "threat", {B, O});

    // gold as prediction scores perfectly
    std::vector<TagSequence> perfect;
    for (const auto& p : gold.posts) perfect.push_back(*p.gold);
    EvalReport r = evaluate(gold, perfect);
    CHECK(r.span.f1 == doctest::Approx(1.0));
    CHECK(r.token.f1 == doctest::Approx(1.0));
    CHECK(r.invalid_rate == doctest::Approx(0.0));

    // imperfect prediction
    std::vector<TagSequence> preds{TagSequence{{O, B, O}}, TagSequence{{O, O}},
                                   TagSequence{{O, O}}};
    EvalReport r2 = evaluate(gold, preds);
    CHECK(r2.token.precision == doctest::Approx(1.0));
    CHECK(r2.token.recall == doctest::Approx(1.0 / 3.0));

    auto by_domain = breakdown(gold, preds, GroupBy::Domain);
    CHECK(by_domain.size() == 2);
    CHECK(by_domain.at("youtube").token.recall == doctest::Approx(0.0));
    auto by_cat = breakdown(gold, preds, GroupBy::Category);
    CHECK(by_cat.count("other") == 1);  // empty category bucket
    CHECK(by_cat.count("insult") == 1);

    std::string text = eval_to_string(r2);
    CHECK(text.find("token_f1=") != std::string::npos);
}

TEST_CASE("evaluate requires gold labels") {
    Corpus gold;
    Post p;
    p.id = "x";
    p.tokens.push_back({"w", 0, 1});
    gold.posts.push_back(p);
    CHECK_THROWS_AS(evaluate(gold, {TagSequence{{O}}}), Error);
}
