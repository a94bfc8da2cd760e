#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fsts/default_table.hpp"
#include "fsts/metrics.hpp"
#include "fsts/pipeline.hpp"
#include "fixtures.hpp"

using namespace fsts;

namespace {

// Brute-force oracles, kept deliberately independent of the implementation:
// F1 from a direct confusion count, AUC from all-pairs comparison.

double oracle_f1(const PixelMask& pred, const PixelMask& gt) {
    double tp = 0, fp = 0, fn = 0;
    for (int y = 0; y < gt.height(); ++y)
        for (int x = 0; x < gt.width(); ++x) {
            if (pred.get(x, y) && gt.get(x, y)) tp += 1;
            if (pred.get(x, y) && !gt.get(x, y)) fp += 1;
            if (!pred.get(x, y) && gt.get(x, y)) fn += 1;
        }
    if (tp == 0 && fp == 0 && fn == 0) return 1.0;
    return 2 * tp / (2 * tp + fp + fn);
}

double oracle_auc(const std::vector<double>& scores, const PixelMask& gt) {
    // P(score_pos > score_neg) + 0.5 P(equal), over all pos/neg pairs
    std::vector<double> pos, neg;
    for (int y = 0; y < gt.height(); ++y)
        for (int x = 0; x < gt.width(); ++x) {
            double s = scores[size_t(y) * gt.width() + x];
            (gt.get(x, y) ? pos : neg).push_back(s);
        }
    double wins = 0;
    for (double p : pos)
        for (double n : neg) {
            if (p > n) wins += 1.0;
            else if (p == n) wins += 0.5;
        }
    return wins / (double(pos.size()) * neg.size());
}

PixelMask mask_from_bits(uint32_t bits, int w, int h) {
    PixelMask m(w, h);
    for (int i = 0; i < w * h; ++i)
        m.set(i % w, i / w, (bits >> i) & 1);
    return m;
}

}  // namespace

TEST_CASE("pixel F1 basics") {
    PixelMask a(4, 4), b(4, 4);
    a.set(1, 1, true);
    b.set(1, 1, true);
    CHECK(pixel_f1(a, b) == 1.0);

    PixelMask c(4, 4);
    c.set(2, 2, true);
    CHECK(pixel_f1(a, c) == 0.0);

    // TP=2, FP=1, FN=1
    PixelMask pred(4, 4), gt(4, 4);
    gt.set(0, 0, true);
    gt.set(1, 0, true);
    gt.set(2, 0, true);
    pred.set(0, 0, true);
    pred.set(1, 0, true);
    pred.set(3, 3, true);
    CHECK(pixel_f1(pred, gt) == Catch::Approx(2.0 * 2 / (2.0 * 2 + 1 + 1)).margin(1e-9));

    CHECK(pixel_f1(PixelMask(3, 3), PixelMask(3, 3)) == 1.0);  // empty-vs-empty
    REQUIRE_THROWS(pixel_f1(PixelMask(2, 2), PixelMask(3, 3)));
}

TEST_CASE("pixel F1 matches the oracle on every 2x2 and 3x3 pair") {
    for (uint32_t g = 0; g < 16; ++g)
        for (uint32_t p = 0; p < 16; ++p) {
            auto gt = mask_from_bits(g, 2, 2);
            auto pred = mask_from_bits(p, 2, 2);
            REQUIRE(pixel_f1(pred, gt) == Catch::Approx(oracle_f1(pred, gt)).margin(1e-12));
        }
    for (uint32_t g = 0; g < 512; g += 7)  // stride keeps the unit test quick
        for (uint32_t p = 0; p < 512; p += 5) {
            auto gt = mask_from_bits(g, 3, 3);
            auto pred = mask_from_bits(p, 3, 3);
            REQUIRE(pixel_f1(pred, gt) == Catch::Approx(oracle_f1(pred, gt)).margin(1e-12));
        }
}

TEST_CASE("pixel AUC basics") {
    PixelMask gt(2, 3);
    gt.set(0, 0, true);
    gt.set(1, 0, true);
    std::vector<double> perfect = {1, 1, 0, 0, 0, 0};
    CHECK(pixel_auc(perfect, gt) == 1.0);
    std::vector<double> constant = {0.4, 0.4, 0.4, 0.4, 0.4, 0.4};
    CHECK(pixel_auc(constant, gt) == 0.5);

    // one inversion among six pixels
    std::vector<double> inverted = {0.9, 0.2, 0.5, 0.1, 0.05, 0.0};
    CHECK(pixel_auc(inverted, gt) == Catch::Approx(oracle_auc(inverted, gt)).margin(1e-12));

    REQUIRE_THROWS(pixel_auc(constant, PixelMask(2, 3)));  // single class
}

TEST_CASE("pixel AUC matches the all-pairs oracle on random cases") {
    RngStream rng(6060);
    for (int trial = 0; trial < 40; ++trial) {
        int w = 5 + int(rng.uniform_int(0, 4));
        int h = 4 + int(rng.uniform_int(0, 4));
        PixelMask gt(w, h);
        size_t on = 0;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                bool v = rng.bernoulli(0.3);
                gt.set(x, y, v);
                on += v;
            }
        if (on == 0 || on == size_t(w) * h) continue;
        std::vector<double> scores(size_t(w) * h);
        for (auto& s : scores) {
            s = rng.uniform_real(0, 1);
            if (rng.bernoulli(0.3)) s = std::round(s * 4) / 4;  // force ties
        }
        REQUIRE(pixel_auc(scores, gt) ==
                Catch::Approx(oracle_auc(scores, gt)).margin(1e-12));
    }
}

TEST_CASE("chi-square p-values behave") {
    // perfectly matching counts: statistic 0 -> p = 1
    std::vector<size_t> counts = {500, 300, 200};
    std::vector<double> probs = {0.5, 0.3, 0.2};
    CHECK(chi_square_p_value(chi_square_statistic(counts, probs), 2) ==
          Catch::Approx(1.0));
    // known value: chi2 = 1 with 1 dof -> p ~ 0.3173
    CHECK(chi_square_p_value(1.0, 1) == Catch::Approx(0.31731).margin(1e-4));
    // gross mismatch -> tiny p
    std::vector<size_t> off = {900, 50, 50};
    CHECK(chi_square_p_value(chi_square_statistic(off, probs), 2) < 1e-6);
}

TEST_CASE("frequency report closes the loop on sampled plans") {
    auto table = default_parameter_table();
    auto model = uniform_population_model();
    auto corpus = testutil::make_corpus(2, 555);
    std::vector<RegionAnnotation> regions = corpus[0].annotations;

    std::vector<SampleRecord> records;
    const int N = 4000;
    for (int i = 0; i < N; ++i) {
        auto rng = derive_stream(404, "fr" + std::to_string(i));
        auto plan = sample_plan(model, table, regions, rng, "", {4000, 4000});
        SampleRecord r;
        r.sample_id = plan.sample_id;
        for (const auto& p : plan.items) {
            ItemRecord item;
            item.type = p.type;
            item.target = p.target;
            item.choices = p.choices;
            r.items.push_back(std::move(item));
        }
        records.push_back(std::move(r));
    }
    auto report = frequency_report(records, table);
    REQUIRE(!report.rows.empty());
    for (const auto& test : report.tests) {
        INFO(to_string(test.type) << " group " << test.op_id << " chi2=" << test.statistic
                                  << " samples=" << test.samples);
        if (test.samples >= 500) REQUIRE(test.p_value > 0.001);
    }
    // empirical tracks configured within CI for well-sampled groups
    for (const auto& row : report.rows) {
        if (report.items_per_type[int(row.type)] < 500) continue;
        INFO(to_string(row.type) << " " << row.op_id << " " << row.variant);
        REQUIRE(std::abs(row.empirical - row.configured) <=
                std::max(0.02, 3.0 * row.ci_halfwidth));
    }
}

TEST_CASE("single-record reports skip the tests") {
    auto table = default_parameter_table();
    SampleRecord r;
    r.sample_id = "solo";
    ItemRecord item;
    item.type = TamperType::Removal;
    r.items.push_back(item);
    auto report = frequency_report(std::vector<SampleRecord>{r}, table);
    for (const auto& t : report.tests) REQUIRE(t.samples > 1);
}

TEST_CASE("top operations ranks by usage share") {
    auto table = default_parameter_table();
    std::vector<SampleRecord> records;
    SampleRecord r;
    for (int i = 0; i < 100; ++i) {
        ItemRecord item;
        item.type = TamperType::Replacement;
        auto add = [&](const std::string& op, const std::string& variant) {
            ResolvedChoice c;
            c.op_id = op;
            c.variant = variant;
            item.choices.push_back(c);
        };
        if (i < 62) add("2.1", "content-aware-fill");
        if (i < 40) add("5.2", "gaussian-blur");
        if (i < 35) add("5.4", "noise");
        if (i < 10) add("5.5", "stroke");
        r.items.push_back(item);
    }
    records.push_back(r);
    auto top = top_operations(records, table, TamperType::Replacement, 8);
    REQUIRE(top.size() >= 3);
    CHECK(top[0].variant == "content-aware-fill");
    CHECK(top[0].label == "Content-Aware Fill");
    CHECK(top[0].share == Catch::Approx(0.62));
    CHECK(top[1].variant == "gaussian-blur");
    CHECK(top[2].variant == "noise");
}
