#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "fsts/raster/text.hpp"
#include "helpers.hpp"

using namespace fsts;

TEST_CASE("all five table families resolve from the built-in library") {
    const auto& lib = FontLibrary::builtin();
    for (const char* fam :
         {"times-new-roman", "simsun", "kaiti", "microsoft-yahei", "simhei"})
        REQUIRE_NOTHROW(lib.resolve(fam));
    REQUIRE_THROWS_WITH(lib.resolve("comic-sans"),
                        Catch::Matchers::ContainsSubstring("unresolvable font family"));
}

TEST_CASE("anti-aliasing 'none' renders two-level output") {
    ImageBuffer img(120, 24, {255, 255, 255});
    TextStyle style;
    style.family = "microsoft-yahei";
    style.anti_alias = AntiAliasMode::None;
    style.color = {0, 0, 0};
    auto res = render_text_into(img, {2, 2, 116, 20}, "Hi7", style);
    bool any_ink = false;
    for (int y = 0; y < res.image.height(); ++y)
        for (int x = 0; x < res.image.width(); ++x) {
            Rgb c = res.image.get(x, y);
            bool ink = c == Rgb{0, 0, 0};
            bool bg = c == Rgb{255, 255, 255};
            REQUIRE((ink || bg));
            any_ink = any_ink || ink;
        }
    REQUIRE(any_ink);
}

TEST_CASE("smooth mode produces intermediate coverage at glyph edges") {
    ImageBuffer img(120, 23, {255, 255, 255});
    TextStyle style;
    style.anti_alias = AntiAliasMode::Smooth;
    auto res = render_text_into(img, {2, 2, 116, 19}, "O", style);
    bool intermediate = false;
    for (int y = 0; y < res.image.height() && !intermediate; ++y)
        for (int x = 0; x < res.image.width() && !intermediate; ++x) {
            uint8_t v = res.image.get(x, y).r;
            intermediate = v != 0 && v != 255;
        }
    REQUIRE(intermediate);
}

TEST_CASE("rendering is confined to the region") {
    ImageBuffer img(100, 60, {200, 200, 200});
    Rect region = {20, 20, 50, 16};
    auto res = render_text_into(img, region, "WWWWWWWWWWWWWW", TextStyle{});
    for (int y = 0; y < 60; ++y)
        for (int x = 0; x < 100; ++x) {
            if (region.contains(x, y)) continue;
            REQUIRE(res.image.get(x, y) == Rgb{200, 200, 200});
        }
    // the overlong string is clipped, not wrapped
    REQUIRE(res.glyphs.rect == region);
}

TEST_CASE("rendering twice is deterministic") {
    ImageBuffer img(80, 20, {250, 250, 250});
    TextStyle style;
    style.family = "times-new-roman";
    auto a = render_text_into(img, {1, 1, 78, 18}, "Abc123", style);
    auto b = render_text_into(img, {1, 1, 78, 18}, "Abc123", style);
    REQUIRE(a.image == b.image);
}

TEST_CASE("distinct families produce distinct rasters") {
    ImageBuffer img(100, 22, {255, 255, 255});
    TextStyle serif;
    serif.family = "times-new-roman";
    TextStyle sans;
    sans.family = "microsoft-yahei";
    auto a = render_text_into(img, {1, 1, 98, 20}, "Rag", serif);
    auto b = render_text_into(img, {1, 1, 98, 20}, "Rag", sans);
    REQUIRE(!(a.image == b.image));
}

TEST_CASE("font directory overrides a family") {
    auto dir = testutil::scratch_dir("fonts");
    // a one-glyph face: 'A' renders as a full 4x4 block
    std::ofstream f(dir / "custom.fsfont");
    f << "fsfont 1\n";
    f << "family times-new-roman\n";
    f << "metrics 4 4 0\n";
    f << "glyph 65 4 4 4 0 0\n";
    f << "f0\nf0\nf0\nf0\n";
    f.close();
    auto lib = FontLibrary::with_directory(dir.string());
    ImageBuffer img(12, 4, {255, 255, 255});
    TextStyle style;
    style.family = "times-new-roman";
    style.anti_alias = AntiAliasMode::None;
    auto res = render_text_into(img, {0, 0, 12, 4}, "A", style, lib);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) REQUIRE(res.image.get(x, y) == Rgb{0, 0, 0});
    // other families fall back to the built-ins
    REQUIRE_NOTHROW(lib.resolve("simhei"));
}

TEST_CASE("degenerate inputs are rejected") {
    ImageBuffer img(10, 10);
    REQUIRE_THROWS(render_text_into(img, {0, 0, 10, 0}, "x", TextStyle{}));
    REQUIRE_THROWS(render_text_into(img, {0, 0, 10, 10}, "", TextStyle{}));
}
