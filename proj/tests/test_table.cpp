#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "fsts/default_table.hpp"
#include "fsts/param_table.hpp"

using namespace fsts;

TEST_CASE("shipped default table validates cleanly") {
    auto table = default_parameter_table();
    auto violations = validate_table(table);
    for (const auto& v : violations) UNSCOPED_INFO(v.path << ": " << v.message);
    REQUIRE(violations.empty());
}

TEST_CASE("replacement content-removal group carries the published shares") {
    auto table = default_parameter_table();
    const auto* g = table.spec_for(TamperType::Replacement).find_group("2.1");
    REQUIRE(g != nullptr);
    REQUIRE(g->variants.size() == 5);
    CHECK(g->find("content-aware-fill")->frequency == Catch::Approx(0.617));
    CHECK(g->find("solid-color-fill")->frequency == Catch::Approx(0.096));
    CHECK(g->find("background-clone")->frequency == Catch::Approx(0.095));
    CHECK(g->find("clone-stamp")->frequency == Catch::Approx(0.104));
    CHECK(g->find("healing-brush")->frequency == Catch::Approx(0.088));
    CHECK(g->residual_none == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("copy-move shape-extraction group leaves the documented residual") {
    auto table = default_parameter_table();
    const auto* g = table.spec_for(TamperType::CopyMove).find_group("2.1");
    REQUIRE(g != nullptr);
    CHECK(g->find("magic-wand")->frequency == Catch::Approx(0.1853));
    CHECK(g->find("channel-levels")->frequency == Catch::Approx(0.2374));
    CHECK(g->residual_none == Catch::Approx(0.5773).margin(1e-9));
}

TEST_CASE("removal content-removal frequencies sum to exactly one") {
    auto table = default_parameter_table();
    const auto* g = table.spec_for(TamperType::Removal).find_group("2.1");
    REQUIRE(g != nullptr);
    CHECK(g->frequency_mass() == Catch::Approx(1.0).margin(1e-9));
    CHECK(g->residual_none == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("every group in the default table satisfies the sum invariant") {
    auto table = default_parameter_table();
    for (const auto& ts : table.types)
        for (const auto& step : ts.steps)
            for (const auto& g : step.groups) {
                INFO(to_string(ts.type) << " group " << g.op_id);
                CHECK(std::abs(g.frequency_mass() + g.residual_none - 1.0) < 1e-6);
                CHECK(g.residual_none >= 0.0);
            }
}

TEST_CASE("serialize/load round-trips to an equal table") {
    auto table = default_parameter_table();
    auto text = serialize_parameter_table(table);
    auto parsed = load_parameter_table(text);
    REQUIRE(parsed == table);
}

TEST_CASE("frequency outside [0,1] is rejected") {
    auto table = default_parameter_table();
    auto text = serialize_parameter_table(table);
    auto pos = text.find("\"frequency\": 0.617");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "\"frequency\": 1.2");
    REQUIRE_THROWS_WITH(load_parameter_table(text),
                        Catch::Matchers::ContainsSubstring("frequency outside [0,1]"));
}

TEST_CASE("group frequency sum above one is rejected") {
    auto table = default_parameter_table();
    // push magic-wand high enough that the 2.1 group overflows
    table.types[0].steps[1].groups[0].variants[0].frequency = 0.9;
    table.types[0].steps[1].groups[0].residual_none = 0.0;
    auto text = serialize_parameter_table(table);
    REQUIRE_THROWS_WITH(load_parameter_table(text),
                        Catch::Matchers::ContainsSubstring("sum exceeds 1"));
}

TEST_CASE("missing type and unknown keys are rejected") {
    auto table = default_parameter_table();
    auto text = serialize_parameter_table(table);
    auto chopped = text;
    auto pos = chopped.find("\"removal\"");
    REQUIRE(pos != std::string::npos);
    chopped.replace(pos, 9, "\"removall\"");
    REQUIRE_THROWS(load_parameter_table(chopped));

    auto extra = text;
    extra.insert(extra.find("\"post_scale\""), "\"mystery\": 1,\n  ");
    REQUIRE_THROWS_WITH(load_parameter_table(extra),
                        Catch::Matchers::ContainsSubstring("unknown key"));
}

TEST_CASE("duplicate op_id inside one step is reported with its path") {
    auto table = default_parameter_table();
    auto& groups = table.types[0].steps[0].groups;
    groups[1].op_id = "1.1";
    for (auto& v : groups[1].variants) v.op_id = "1.1";
    auto violations = validate_table(table);
    bool found = false;
    for (const auto& v : violations)
        if (v.message.find("duplicate op_id 1.1") != std::string::npos) found = true;
    REQUIRE(found);
}

TEST_CASE("malformed document raises a parse error") {
    REQUIRE_THROWS_AS(load_parameter_table("{ not json"), ParseError);
}

TEST_CASE("shipped data file matches the built-in table") {
    std::ifstream in(std::string(FSTS_SOURCE_DIR) + "/data/fsts-default.table",
                     std::ios::binary);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(text == serialize_parameter_table(default_parameter_table()));
}
