#include <catch2/catch_amalgamated.hpp>

#include "fsts/default_table.hpp"
#include "fsts/pipeline.hpp"
#include "fixtures.hpp"

using namespace fsts;

namespace {

const std::vector<testutil::SourceFixture>& corpus() {
    static auto c = testutil::make_corpus(6, 1234);
    return c;
}

SynthesisResult synth(const std::string& sample_id, uint64_t seed,
                      const PopulationModel& model) {
    const auto& fx = corpus()[0];
    auto pool = testutil::pool_view(corpus());
    return synthesize_sample(fx.image, pool, model, default_parameter_table(),
                             fx.annotations, seed, sample_id, FontLibrary::builtin(),
                             fx.id);
}

}  // namespace

TEST_CASE("identical inputs synthesize byte-identical triples") {
    auto model = uniform_population_model();
    auto a = synth("dup-1", 42, model);
    auto b = synth("dup-1", 42, model);
    REQUIRE(a.tampered == b.tampered);
    REQUIRE(a.mask == b.mask);
    REQUIRE(serialize_record(a.record) == serialize_record(b.record));
    auto c = synth("dup-2", 42, model);
    REQUIRE(!(a.tampered == c.tampered));
}

TEST_CASE("an unchanged image yields an all-zero mask") {
    const auto& fx = corpus()[0];
    auto mask = generate_mask(fx.image, fx.image, {});
    REQUIRE(mask.count() == 0);
}

TEST_CASE("a solid-filled block masks exactly that block") {
    ImageBuffer original(64, 48, {200, 200, 200});
    ImageBuffer tampered = original;
    Rect block = {20, 15, 10, 10};
    tampered.fill_rect(block, {0, 0, 0});
    auto mask = generate_mask(original, tampered, {{block, TamperType::Removal}});
    for (int y = 0; y < 48; ++y)
        for (int x = 0; x < 64; ++x) REQUIRE(mask.get(x, y) == block.contains(x, y));
}

TEST_CASE("two disjoint edits produce two mask components") {
    ImageBuffer original(64, 48, {200, 200, 200});
    ImageBuffer tampered = original;
    Rect a = {5, 5, 8, 8}, b = {40, 30, 10, 6};
    tampered.fill_rect(a, {0, 0, 0});
    tampered.fill_rect(b, {50, 50, 50});
    auto mask = generate_mask(original, tampered,
                              {{a, TamperType::Removal}, {b, TamperType::Removal}});
    REQUIRE(connected_components(mask) == 2);
}

TEST_CASE("mask generation rejects out-of-geometry edits") {
    ImageBuffer original(32, 32, {100, 100, 100});
    ImageBuffer tampered = original;
    tampered.set(20, 20, {0, 0, 0});
    REQUIRE_THROWS(generate_mask(original, tampered, {{{2, 2, 4, 4}, TamperType::Removal}}));
    REQUIRE_THROWS(generate_mask(original, ImageBuffer(16, 16), {}));
}

TEST_CASE("a removal-only model touches only removal geometries") {
    PopulationModel model = uniform_population_model();
    model.type_weights = {0, 0, 1, 0, 0};
    auto res = synth("rem-only", 99, model);
    REQUIRE(!res.record.items.empty());
    for (const auto& item : res.record.items) REQUIRE(item.type == TamperType::Removal);
    for (int y = 0; y < res.mask.height(); ++y)
        for (int x = 0; x < res.mask.width(); ++x) {
            if (!res.mask.get(x, y)) continue;
            bool inside = false;
            for (const auto& item : res.record.items)
                inside = inside || item.effective.dilated(1).contains(x, y);
            REQUIRE(inside);
        }
}

TEST_CASE("outside-mask pixels are bit-identical to the original") {
    auto model = uniform_population_model();
    const auto& fx = corpus()[0];
    for (int i = 0; i < 25; ++i) {
        auto res = synth("fid-" + std::to_string(i), 7, model);
        auto dilated = dilate3x3(res.mask);
        for (int y = 0; y < res.mask.height(); ++y)
            for (int x = 0; x < res.mask.width(); ++x) {
                if (dilated.get(x, y)) continue;
                REQUIRE(res.tampered.get(x, y) == fx.image.get(x, y));
            }
    }
}

TEST_CASE("mask pixels stay within dilated effective geometries") {
    auto model = uniform_population_model();
    for (int i = 0; i < 25; ++i) {
        auto res = synth("cont-" + std::to_string(i), 13, model);
        for (int y = 0; y < res.mask.height(); ++y)
            for (int x = 0; x < res.mask.width(); ++x) {
                if (!res.mask.get(x, y)) continue;
                bool inside = false;
                for (const auto& item : res.record.items)
                    inside = inside || item.effective.dilated(1).contains(x, y);
                REQUIRE(inside);
            }
    }
}

TEST_CASE("records replay byte-exactly") {
    auto model = uniform_population_model();
    auto pool = testutil::pool_view(corpus());
    const auto& fx = corpus()[0];
    for (int i = 0; i < 10; ++i) {
        auto res = synth("rep-" + std::to_string(i), 4711, model);
        // through serialization, as the CLI would do it
        auto parsed = parse_record(serialize_record(res.record));
        auto replayed = replay_sample(parsed, fx.image, pool);
        REQUIRE(replayed.tampered == res.tampered);
        REQUIRE(replayed.mask == res.mask);
    }
}

TEST_CASE("splicing requires a cross-image source") {
    PopulationModel model = uniform_population_model();
    model.type_weights = {0, 1, 0, 0, 0};
    const auto& fx = corpus()[0];
    // pool containing only the target image: no candidate remains
    std::vector<SourceEntry> self_pool = {{fx.id, &fx.image, &fx.annotations}};
    REQUIRE_THROWS_WITH(
        synthesize_sample(fx.image, self_pool, model, default_parameter_table(),
                          fx.annotations, 1, "splice-self", FontLibrary::builtin(), fx.id),
        Catch::Matchers::ContainsSubstring("source pool"));
}

TEST_CASE("splicing pulls its patch from the recorded source image") {
    PopulationModel model = uniform_population_model();
    model.type_weights = {0, 1, 0, 0, 0};
    auto res = synth("splice-1", 2024, model);
    REQUIRE(!res.record.items.empty());
    for (const auto& item : res.record.items) {
        REQUIRE(item.type == TamperType::Splicing);
        REQUIRE(!item.splice_image.empty());
        REQUIRE(item.splice_image != corpus()[0].id);
        REQUIRE(!item.splice_region.empty());
    }
}

TEST_CASE("insertion falls back to detected blank regions") {
    const auto& fx = corpus()[1];
    std::vector<RegionAnnotation> text_only;
    for (const auto& a : fx.annotations)
        if (a.kind == RegionKind::Text) text_only.push_back(a);
    PopulationModel model = uniform_population_model();
    model.type_weights = {0, 0, 0, 1, 0};
    auto pool = testutil::pool_view(corpus());
    auto res = synthesize_sample(fx.image, pool, model, default_parameter_table(),
                                 text_only, 5, "ins-auto", FontLibrary::builtin(), fx.id);
    REQUIRE(!res.record.items.empty());
    for (const auto& item : res.record.items) {
        REQUIRE(item.type == TamperType::Insertion);
        REQUIRE(item.target.id.rfind("auto-blank-", 0) == 0);
    }
}

TEST_CASE("replacement erases and re-renders in place") {
    PopulationModel model = uniform_population_model();
    model.type_weights = {0, 0, 0, 0, 1};
    auto res = synth("repl-1", 77, model);
    REQUIRE(!res.record.items.empty());
    for (const auto& item : res.record.items) {
        REQUIRE(item.type == TamperType::Replacement);
        REQUIRE(!item.text.empty());
        REQUIRE(item.ink.has_value());
        // the edit actually landed: mask covers part of the target
        bool touched = false;
        Rect r = item.target.rect;
        for (int y = r.y; y < r.bottom() && !touched; ++y)
            for (int x = r.x; x < r.right() && !touched; ++x)
                touched = res.mask.get(x, y);
        REQUIRE(touched);
    }
}

TEST_CASE("per-type mask colors follow the documented convention") {
    CHECK(mask_color_for(TamperType::CopyMove) == Rgb{0, 255, 255});
    CHECK(mask_color_for(TamperType::Splicing) == Rgb{0, 255, 0});
    CHECK(mask_color_for(TamperType::Removal) == Rgb{0, 0, 255});
    CHECK(mask_color_for(TamperType::Insertion) == Rgb{255, 255, 0});
    CHECK(mask_color_for(TamperType::Replacement) == Rgb{255, 0, 0});
}

TEST_CASE("sample records round-trip through JSON") {
    auto model = uniform_population_model();
    auto res = synth("roundtrip", 31337, model);
    auto parsed = parse_record(serialize_record(res.record));
    REQUIRE(parsed.equivalent(res.record));
}

TEST_CASE("copy-move with no transform or concealment duplicates pixels exactly") {
    ImageBuffer img(80, 60, {230, 230, 230});
    Rect src = {10, 10, 12, 8};
    img.fill_rect({12, 12, 8, 4}, {20, 20, 20});  // a glyph-ish block
    ItemRecord item;
    item.type = TamperType::CopyMove;
    item.copy_source = RegionAnnotation{"src", src, RegionKind::Text, ""};
    item.target = RegionAnnotation{"dst", {40, 30, 12, 8}, RegionKind::Text, ""};
    RngStream rng(1);
    Rect effective = execute_copy_move(img, item, rng);
    REQUIRE(effective == Rect{40, 30, 12, 8});
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 12; ++x)
            REQUIRE(img.get(40 + x, 30 + y) == img.get(src.x + x, src.y + y));
}

TEST_CASE("safety color obeys the published ranges on light and dark backgrounds") {
    auto make_item = [](Rgb light, Rgb dark) {
        ItemRecord item;
        item.type = TamperType::Insertion;
        item.target = RegionAnnotation{"b", {10, 10, 60, 16}, RegionKind::NonText, ""};
        item.text = "XY";
        ResolvedChoice fonts;
        fonts.op_id = "2.1";
        fonts.variant = "font-properties";
        fonts.params = {{"font", ParamValue::text("simhei")},
                        {"anti-aliasing", ParamValue::text("none")}};
        ResolvedChoice safety;
        safety.op_id = "2.2";
        safety.variant = "safety-color";
        safety.params = {{"light-background", ParamValue::rgb(light)},
                         {"dark-background", ParamValue::rgb(dark)}};
        item.choices = {fonts, safety};
        return item;
    };
    Rgb light_pick = {40, 12, 63}, dark_pick = {200, 255, 192};

    ImageBuffer light_bg(100, 40, {240, 240, 240});
    auto item = make_item(light_pick, dark_pick);
    RngStream rng(2);
    execute_insertion(light_bg, item, rng);
    REQUIRE(item.ink.has_value());
    CHECK(item.ink->r <= 64);
    CHECK(item.ink->g <= 64);
    CHECK(item.ink->b <= 64);

    ImageBuffer dark_bg(100, 40, {20, 20, 20});
    auto item2 = make_item(light_pick, dark_pick);
    RngStream rng2(2);
    execute_insertion(dark_bg, item2, rng2);
    REQUIRE(item2.ink.has_value());
    CHECK(item2.ink->r >= 192);
    CHECK(item2.ink->g >= 192);
    CHECK(item2.ink->b >= 192);
}

TEST_CASE("replacement with solid fill and no concealment is fill plus glyphs only") {
    ImageBuffer img(100, 50, {235, 235, 235});
    Rect region = {20, 15, 50, 14};
    img.fill_rect({24, 18, 30, 6}, {10, 10, 10});  // original text
    ItemRecord item;
    item.type = TamperType::Replacement;
    item.target = RegionAnnotation{"r", region, RegionKind::Text, "OLD"};
    item.text = "NEW";
    ResolvedChoice removal;
    removal.op_id = "2.1";
    removal.variant = "solid-color-fill";
    removal.params = {{"color", ParamValue::rgb({200, 210, 220})}};
    ResolvedChoice fonts;
    fonts.op_id = "3.1";
    fonts.variant = "font-properties";
    fonts.params = {{"font", ParamValue::text("microsoft-yahei")},
                    {"anti-aliasing", ParamValue::text("none")}};
    item.choices = {removal, fonts};
    RngStream rng(3);
    ImageBuffer before = img;
    execute_replacement(img, item, rng);
    REQUIRE(item.ink.has_value());
    for (int y = region.y; y < region.bottom(); ++y)
        for (int x = region.x; x < region.right(); ++x) {
            Rgb c = img.get(x, y);
            bool is_fill = c == Rgb{200, 210, 220};
            bool is_ink = c == *item.ink;
            REQUIRE((is_fill || is_ink));
        }
    // outside the region nothing moved
    for (int y = 0; y < 50; ++y)
        for (int x = 0; x < 100; ++x)
            if (!region.contains(x, y)) REQUIRE(img.get(x, y) == before.get(x, y));
}
