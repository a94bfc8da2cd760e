#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fsts/default_table.hpp"
#include "fsts/fitting.hpp"
#include "helpers.hpp"

using namespace fsts;

namespace {

// Builds records for one tamperer where, within one type, the "2.1" group
// uses the given variants with exact per-sample counts.
std::vector<EditLogRecord> crafted_logs(const std::string& tamperer, TamperType type,
                                        const std::vector<std::pair<std::string, int>>& uses,
                                        int total_samples) {
    std::vector<EditLogRecord> out;
    int sample = 0;
    for (const auto& [variant, count] : uses)
        for (int i = 0; i < count; ++i) {
            EditLogRecord r;
            r.tamperer_id = tamperer;
            r.sample_id = "s" + std::to_string(sample++);
            r.type = type;
            r.op_id = "2.1";
            r.variant = variant;
            out.push_back(r);
        }
    while (sample < total_samples) {
        EditLogRecord r;
        r.tamperer_id = tamperer;
        r.sample_id = "s" + std::to_string(sample++);
        r.type = type;
        r.op_id = "1.1";
        r.variant = "text-region-selection";
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("dominant variant becomes the representative") {
    // 67% of this tamperer's replacement samples use content-aware fill
    auto logs = crafted_logs("t1", TamperType::Replacement,
                             {{"content-aware-fill", 670},
                              {"solid-color-fill", 200},
                              {"clone-stamp", 130}},
                             1000);
    auto model = fit_individual(logs, 0.02);
    const auto* rep = model.representatives[int(TamperType::Replacement)].find("2.1");
    REQUIRE(rep != nullptr);
    CHECK(rep->variant == "content-aware-fill");
    CHECK(rep->share == Catch::Approx(0.67));
}

TEST_CASE("single-sample logs make that configuration representative") {
    EditLogRecord r;
    r.tamperer_id = "solo";
    r.sample_id = "only";
    r.type = TamperType::Removal;
    r.op_id = "2.1";
    r.variant = "healing-brush";
    r.params = {{"mode", "replace"}};
    auto model = fit_individual(std::vector<EditLogRecord>{r}, 0.02);
    CHECK(model.type_weights[int(TamperType::Removal)] == 1.0);
    const auto* rep = model.representatives[int(TamperType::Removal)].find("2.1");
    REQUIRE(rep != nullptr);
    CHECK(rep->variant == "healing-brush");
    CHECK(rep->params.at("mode").mode == "replace");
}

TEST_CASE("variants below the threshold never enter the candidate basis") {
    // shares 0.55 / 0.30 / 0.15, threshold 0.2: the 0.15 variant is excluded
    auto logs = crafted_logs("t2", TamperType::Removal,
                             {{"content-aware-fill", 55},
                              {"solid-color-fill", 30},
                              {"clone-stamp", 15}},
                             100);
    auto model = fit_individual(logs, 0.2);
    const auto* rep = model.representatives[int(TamperType::Removal)].find("2.1");
    REQUIRE(rep != nullptr);
    CHECK(rep->variant == "content-aware-fill");

    // and with a threshold above the runner-up, only the leader remains
    auto strict = fit_individual(logs, 0.5);
    const auto* top = strict.representatives[int(TamperType::Removal)].find("2.1");
    REQUIRE(top != nullptr);
    CHECK(top->variant == "content-aware-fill");
}

TEST_CASE("individual threshold boundary is inclusive") {
    auto at = fit_individual(
        crafted_logs("t3", TamperType::Removal, {{"solid-color-fill", 20}}, 1000), 0.02);
    REQUIRE(at.representatives[int(TamperType::Removal)].find("2.1") != nullptr);

    auto below = fit_individual(
        crafted_logs("t4", TamperType::Removal, {{"solid-color-fill", 19}}, 1000), 0.02);
    REQUIRE(below.representatives[int(TamperType::Removal)].find("2.1") == nullptr);
}

TEST_CASE("fit_individual rejects bad input") {
    REQUIRE_THROWS(fit_individual(std::vector<EditLogRecord>{}, 0.02));
    auto logs = crafted_logs("a", TamperType::Removal, {{"clone-stamp", 1}}, 1);
    REQUIRE_THROWS(fit_individual(logs, 0.0));
    REQUIRE_THROWS(fit_individual(logs, 1.0));
    auto mixed = logs;
    mixed.push_back(crafted_logs("b", TamperType::Removal, {{"clone-stamp", 1}}, 1)[0]);
    REQUIRE_THROWS(fit_individual(mixed, 0.02));
}

TEST_CASE("single individual aggregates to itself with normalized weights") {
    auto logs = crafted_logs("t5", TamperType::Splicing, {{"magic-wand", 10}}, 10);
    auto individual = fit_individual(logs, 0.02);
    auto pop = aggregate_population(std::vector<IndividualModel>{individual}, 0.05);
    CHECK(pop.individuals == 1);
    double sum = 0;
    for (double w : pop.type_weights) sum += w;
    CHECK(sum == Catch::Approx(1.0));
    CHECK(pop.type_weights[int(TamperType::Splicing)] == Catch::Approx(1.0));
    REQUIRE(pop.representatives[int(TamperType::Splicing)].find("2.1") != nullptr);
    CHECK(pop.representatives[int(TamperType::Splicing)].find("2.1")->variant ==
          "magic-wand");
}

TEST_CASE("population threshold boundary is inclusive at exactly 5%") {
    // 20 individuals; exactly one carries the rare representative
    std::vector<IndividualModel> models;
    for (int i = 0; i < 20; ++i) {
        std::string variant = i == 0 ? "healing-brush" : "content-aware-fill";
        auto logs = crafted_logs("t" + std::to_string(i), TamperType::Removal,
                                 {{variant, 10}}, 10);
        models.push_back(fit_individual(logs, 0.02));
    }
    auto pop = aggregate_population(models, 0.05);
    // healing-brush sits at exactly 1/20 = 5%: retained as a qualifying
    // configuration, but content-aware-fill (19/20) is the most shared
    const auto* rep = pop.representatives[int(TamperType::Removal)].find("2.1");
    REQUIRE(rep != nullptr);
    CHECK(rep->variant == "content-aware-fill");
    CHECK(rep->share == Catch::Approx(0.95));

    // flip the shares so the boundary case is the only candidate
    std::vector<IndividualModel> sparse;
    for (int i = 0; i < 20; ++i) {
        std::vector<std::pair<std::string, int>> uses;
        if (i == 0) uses = {{"healing-brush", 10}};
        auto logs = crafted_logs("u" + std::to_string(i), TamperType::Removal, uses, 10);
        sparse.push_back(fit_individual(logs, 0.02));
    }
    auto pop2 = aggregate_population(sparse, 0.05);
    const auto* rep2 = pop2.representatives[int(TamperType::Removal)].find("2.1");
    REQUIRE(rep2 != nullptr);
    CHECK(rep2->variant == "healing-brush");
}

TEST_CASE("population share below 5% is dropped") {
    std::vector<IndividualModel> models;
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::pair<std::string, int>> uses;
        if (i < 49) uses = {{"healing-brush", 10}};  // 4.9%
        auto logs = crafted_logs("v" + std::to_string(i), TamperType::Removal, uses, 10);
        models.push_back(fit_individual(logs, 0.02));
    }
    auto pop = aggregate_population(models, 0.05);
    REQUIRE(pop.representatives[int(TamperType::Removal)].find("2.1") == nullptr);
}

TEST_CASE("fit then aggregate recovers known type weights within 0.02") {
    auto table = default_parameter_table();
    std::array<double, kTamperTypeCount> truth = {0.35, 0.10, 0.25, 0.10, 0.20};
    RngStream rng(7);
    std::vector<IndividualModel> models;
    const int I = 20, J = 50;
    for (int i = 0; i < I; ++i) {
        auto logs = testutil::synth_individual_logs("tamperer-" + std::to_string(i), table,
                                                    truth, J, rng);
        models.push_back(fit_individual(logs, 0.02));
    }
    auto pop = aggregate_population(models, 0.05);
    for (int t = 0; t < kTamperTypeCount; ++t) {
        INFO("type " << to_string(kAllTamperTypes[t]));
        CHECK(std::abs(pop.type_weights[t] - truth[t]) <= 0.02);
    }
    // dominant table variants become the population representatives
    CHECK(pop.representatives[int(TamperType::Removal)].find("2.1")->variant ==
          "content-aware-fill");
    CHECK(pop.representatives[int(TamperType::Replacement)].find("2.1")->variant ==
          "content-aware-fill");
    // distance between recovered and true coefficients is small
    CHECK(coefficient_distance(pop.type_weights, truth) < 0.03);
}

TEST_CASE("raising the threshold never adds retained configurations") {
    auto table = default_parameter_table();
    RngStream rng(77);
    auto logs = testutil::synth_individual_logs("mono", table, {0.2, 0.2, 0.2, 0.2, 0.2},
                                                400, rng);
    auto retained = [&](double threshold) {
        auto m = fit_individual(logs, threshold);
        std::set<std::string> keys;
        for (int t = 0; t < kTamperTypeCount; ++t)
            for (const auto& c : m.representatives[t].choices)
                keys.insert(std::to_string(t) + "/" + c.op_id + "/" + c.variant);
        return keys;
    };
    auto prev = retained(0.01);
    for (double th : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        auto cur = retained(th);
        for (const auto& k : cur) REQUIRE(prev.count(k) == 1);
        prev = cur;
    }
}

TEST_CASE("coefficient distance basics") {
    std::vector<double> a = {1, 0, 0, 0, 0};
    std::vector<double> b = {0, 1, 0, 0, 0};
    CHECK(coefficient_distance(a, a) == 0.0);
    CHECK(coefficient_distance(a, b) == 1.0);
    std::vector<double> c = {0.3, 0.3, 0.2, 0.1, 0.1};
    std::vector<double> d = {0.2, 0.2, 0.2, 0.2, 0.2};
    CHECK(coefficient_distance(c, d) == Catch::Approx(0.2));
    // scale invariance through normalization
    std::vector<double> c2 = {3, 3, 2, 1, 1};
    CHECK(coefficient_distance(c2, d) == Catch::Approx(0.2));

    REQUIRE_THROWS(coefficient_distance(std::vector<double>{1, 2}, a));
    REQUIRE_THROWS(coefficient_distance(std::vector<double>{0, 0}, std::vector<double>{0, 0}));
}

TEST_CASE("coefficient distance is a metric on random 5-dim triples") {
    RngStream rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(5), y(5), z(5);
        for (int i = 0; i < 5; ++i) {
            x[i] = rng.uniform_real(0, 1);
            y[i] = rng.uniform_real(0, 1);
            z[i] = rng.uniform_real(0, 1);
        }
        double dxy = coefficient_distance(x, y);
        double dyx = coefficient_distance(y, x);
        double dxz = coefficient_distance(x, z);
        double dzy = coefficient_distance(z, y);
        REQUIRE(dxy >= 0.0);
        REQUIRE(dxy <= 1.0);
        REQUIRE(dxy == Catch::Approx(dyx));
        REQUIRE(dxy <= dxz + dzy + 1e-12);
    }
}

TEST_CASE("model files round-trip through the versioned text format") {
    auto table = default_parameter_table();
    RngStream rng(9001);
    std::vector<IndividualModel> models;
    for (int i = 0; i < 5; ++i)
        models.push_back(fit_individual(
            testutil::synth_individual_logs("rt-" + std::to_string(i), table,
                                            {0.2, 0.2, 0.2, 0.2, 0.2}, 60, rng),
            0.02));
    auto pop = aggregate_population(models, 0.05);
    pop.representatives[0].choices[0].range_overrides["tolerance"] = {5.0, 25.0};

    auto text = serialize_model(pop);
    REQUIRE(text.rfind("format_version: 1", 0) == 0);
    auto parsed = parse_model(text);
    CHECK(parsed.individuals == pop.individuals);
    CHECK(parsed.samples == pop.samples);
    for (int t = 0; t < kTamperTypeCount; ++t) {
        CHECK(parsed.type_weights[t] == Catch::Approx(pop.type_weights[t]));
        REQUIRE(parsed.representatives[t].choices.size() ==
                pop.representatives[t].choices.size());
        for (size_t i = 0; i < pop.representatives[t].choices.size(); ++i) {
            const auto& a = pop.representatives[t].choices[i];
            const auto& b = parsed.representatives[t].choices[i];
            CHECK(a.op_id == b.op_id);
            CHECK(a.variant == b.variant);
            CHECK(a.range_overrides == b.range_overrides);
        }
    }
    REQUIRE_THROWS(parse_model("kind: population\n"));
}
