#include <catch2/catch_amalgamated.hpp>

#include "fsts/raster/color.hpp"
#include "fsts/raster/effects.hpp"
#include "fsts/raster/filters.hpp"
#include "fsts/raster/removal.hpp"
#include "fsts/raster/shape.hpp"
#include "fsts/raster/transform.hpp"
#include "fsts/rng.hpp"

using namespace fsts;

namespace {

ImageBuffer noise_image(int w, int h, uint64_t seed) {
    RngStream rng(seed);
    ImageBuffer img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.set(x, y,
                    {uint8_t(rng.uniform_int(0, 255)), uint8_t(rng.uniform_int(0, 255)),
                     uint8_t(rng.uniform_int(0, 255))});
    return img;
}

ImageBuffer glyph_image(int w, int h, Rgb bg, Rgb fg, const Rect& glyph) {
    ImageBuffer img(w, h, bg);
    img.fill_rect(glyph, fg);
    return img;
}

bool identical_outside(const ImageBuffer& a, const ImageBuffer& b, const Rect& region) {
    for (int y = 0; y < a.height(); ++y)
        for (int x = 0; x < a.width(); ++x) {
            if (region.contains(x, y)) continue;
            if (!(a.get(x, y) == b.get(x, y))) return false;
        }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- shapes

TEST_CASE("magic wand lifts a high-contrast glyph exactly") {
    Rect glyph = {12, 12, 6, 8};
    auto img = glyph_image(40, 32, {250, 250, 250}, {0, 0, 0}, glyph);
    Rect region = {8, 8, 20, 18};
    auto shape = extract_text_shape(img, region, MagicWandExtract{50, true, false});
    for (int y = 0; y < shape.rect.h; ++y)
        for (int x = 0; x < shape.rect.w; ++x) {
            bool in_glyph = glyph.contains(shape.rect.x + x, shape.rect.y + y);
            REQUIRE((shape.coverage_at(x, y) == 255) == in_glyph);
        }
}

TEST_CASE("magic wand on a uniform region yields an empty shape") {
    ImageBuffer img(30, 30, {100, 120, 140});
    auto shape = extract_text_shape(img, {5, 5, 20, 20}, MagicWandExtract{10, true, false});
    for (uint8_t c : shape.coverage) REQUIRE(c == 0);
}

TEST_CASE("levels extraction remaps the red channel linearly") {
    ImageBuffer img(4, 1, {0, 0, 0});
    img.set(0, 0, {130, 10, 10});  // remaps to 0 -> foreground
    img.set(1, 0, {237, 10, 10});  // remaps to 255 -> background
    img.set(2, 0, {183, 10, 10});  // remaps to ~126 -> foreground
    img.set(3, 0, {184, 10, 10});  // remaps to ~129 -> background
    auto shape = extract_text_shape(img, {0, 0, 4, 1}, LevelsExtract{0, 130, 237});
    CHECK(shape.coverage_at(0, 0) == 255);
    CHECK(shape.coverage_at(1, 0) == 0);
    CHECK(shape.coverage_at(2, 0) == 255);
    CHECK(shape.coverage_at(3, 0) == 0);
}

// ------------------------------------------------------------- transform

TEST_CASE("identity transform returns the patch bit-identically") {
    Patch p{noise_image(17, 9, 5), {}};
    TransformSpec id;
    id.scale = 1.0;
    auto out = transform_region(p, id);
    REQUIRE(out.image == p.image);
}

TEST_CASE("adaptive scaling uses the min ratio") {
    CHECK(adaptive_scale(10, 20, 30, 40) == Catch::Approx(2.0));
    Patch p{ImageBuffer(10, 20, {9, 9, 9}), {}};
    TransformSpec spec;
    spec.adapt_to = {{30, 40}};
    auto out = transform_region(p, spec);
    CHECK(out.image.width() == 20);
    CHECK(out.image.height() == 40);
}

TEST_CASE("small rotation round-trips within resampling tolerance") {
    // a smooth low-frequency field keeps bilinear error inside the bound
    ImageBuffer img(40, 30);
    for (int y = 0; y < 30; ++y)
        for (int x = 0; x < 40; ++x) {
            auto v = [&](double px, double py) {
                return uint8_t(128 + 60 * std::sin(px / 9.0) + 50 * std::cos(py / 11.0));
            };
            img.set(x, y, {v(x, y), v(x + 13, y + 5), v(x + 27, y + 17)});
        }
    Patch p{img, {}};
    TransformSpec fwd;
    fwd.rotation_deg = 5.0;
    auto rotated = transform_region(p, fwd);
    TransformSpec back;
    back.rotation_deg = -5.0;
    auto restored = transform_region(rotated, back);
    // compare interior pixels
    int ox = (restored.image.width() - img.width()) / 2;
    int oy = (restored.image.height() - img.height()) / 2;
    for (int y = 8; y < img.height() - 8; ++y)
        for (int x = 8; x < img.width() - 8; ++x) {
            Rgb a = img.get(x, y);
            Rgb b = restored.image.get(x + ox, y + oy);
            REQUIRE(std::abs(int(a.r) - int(b.r)) <= 2);
            REQUIRE(std::abs(int(a.g) - int(b.g)) <= 2);
            REQUIRE(std::abs(int(a.b) - int(b.b)) <= 2);
        }
}

TEST_CASE("composite paste replaces, blends, and respects empty masks") {
    ImageBuffer dst(20, 20, {255, 255, 255});
    Patch opaque{ImageBuffer(5, 5, {1, 2, 3}), {}};
    auto dst2 = dst;
    composite_paste(dst2, opaque, 4, 4);
    for (int y = 4; y < 9; ++y)
        for (int x = 4; x < 9; ++x) REQUIRE(dst2.get(x, y) == Rgb{1, 2, 3});

    Patch masked{ImageBuffer(5, 5, {0, 0, 0}), std::vector<uint8_t>(25, 0)};
    auto dst3 = dst;
    composite_paste(dst3, masked, 4, 4);
    REQUIRE(dst3 == dst);

    Patch half{ImageBuffer(1, 1, {0, 0, 0}), std::vector<uint8_t>(1, 128)};
    auto dst4 = dst;
    composite_paste(dst4, half, 0, 0);
    int v = dst4.get(0, 0).r;
    REQUIRE(std::abs(v - 128) <= 1);

    REQUIRE_THROWS(composite_paste(dst4, opaque, 100, 100));
}

// --------------------------------------------------------------- filters

TEST_CASE("identity convolution kernel leaves the region bit-identical") {
    auto img = noise_image(32, 24, 11);
    ConvolutionFilter id;
    id.kernel[12] = 1;  // center of the 5x5
    id.scale = 1;
    id.offset = 0;
    auto out = apply_filter(img, {4, 4, 20, 12}, id);
    REQUIRE(out == img);
}

TEST_CASE("convolution offset shifts every channel exactly") {
    ImageBuffer img(16, 16, {128, 128, 128});
    ConvolutionFilter f;
    f.kernel[12] = 1;
    f.scale = 1;
    f.offset = 5;
    auto out = apply_filter(img, {2, 2, 10, 10}, f);
    for (int y = 2; y < 12; ++y)
        for (int x = 2; x < 12; ++x) REQUIRE(out.get(x, y) == Rgb{133, 133, 133});
    REQUIRE(identical_outside(img, out, {2, 2, 10, 10}));
}

TEST_CASE("extreme convolution output clamps without wraparound") {
    ImageBuffer img(8, 8, {200, 200, 200});
    ConvolutionFilter f;
    f.kernel[12] = 10;
    f.scale = 1;
    f.offset = 5;
    auto out = apply_filter(img, {0, 0, 8, 8}, f);
    REQUIRE(out.get(3, 3) == Rgb{255, 255, 255});
    f.kernel[12] = -10;
    out = apply_filter(img, {0, 0, 8, 8}, f);
    REQUIRE(out.get(3, 3) == Rgb{0, 0, 0});
}

TEST_CASE("filters only touch their region") {
    auto img = noise_image(48, 40, 23);
    Rect region = {10, 8, 20, 16};
    for (const FilterSpec& spec :
         {FilterSpec{GaussianFilter{3.0}}, FilterSpec{MotionFilter{30.0, 7}},
          FilterSpec{SharpenFilter{150.0, 2.0, 0.0, 1}}, FilterSpec{BlurFilter{}},
          FilterSpec{BlurMoreFilter{}}, FilterSpec{MeanFilter{}},
          FilterSpec{SmartBlurFilter{4.0, 6.0}}, FilterSpec{SurfaceBlurFilter{4, 12.0}},
          FilterSpec{RadialBlurFilter{}},
          FilterSpec{LensBlurFilter{6, 0.5, 0.2, 10.0, 100.0, 80.0, 5.0, false}}}) {
        auto out = apply_filter(img, region, spec);
        REQUIRE(identical_outside(img, out, region));
    }
}

TEST_CASE("gaussian blur smooths a step edge") {
    auto img = glyph_image(30, 20, {255, 255, 255}, {0, 0, 0}, {15, 0, 15, 20});
    auto out = apply_filter(img, {5, 5, 20, 10}, GaussianFilter{3.0});
    int v = out.get(14, 10).r;
    REQUIRE(v > 0);
    REQUIRE(v < 255);
}

// ----------------------------------------------------------------- color

TEST_CASE("neutral color adjustments are identities") {
    auto img = noise_image(24, 24, 31);
    Rect region = {3, 3, 18, 18};
    REQUIRE(apply_color_adjustment(img, region, ColorBalanceAdjust{0, 0, 0}) == img);
    REQUIRE(apply_color_adjustment(img, region, HueSaturationAdjust{0, 0, 0}) == img);
    auto identity_levels = apply_color_adjustment(img, region, LevelsAdjust{0, 0, 255, 0, 255});
    REQUIRE(identity_levels == img);
}

TEST_CASE("raise-highlights lifts brights and fixes midtones") {
    auto lut = curves_lut(CurvesAdjust::Curve::RaiseHighlights);
    CHECK(lut[200] > 200);
    CHECK(lut[50] == 50);
    CHECK(lut[128] == 128);
    auto lower = curves_lut(CurvesAdjust::Curve::LowerShadows);
    CHECK(lower[50] < 50);
    CHECK(lower[200] == 200);
}

TEST_CASE("curve and levels lookups are monotone over all 256 inputs") {
    for (auto curve : {CurvesAdjust::Curve::RaiseHighlights, CurvesAdjust::Curve::LowerShadows}) {
        auto lut = curves_lut(curve);
        for (int v = 1; v < 256; ++v) REQUIRE(lut[v] >= lut[v - 1]);
    }
    auto lv = levels_lut(130, 237, 0, 255);
    for (int v = 1; v < 256; ++v) REQUIRE(lv[v] >= lv[v - 1]);
    CHECK(lv[130] == 0);
    CHECK(lv[237] == 255);
}

TEST_CASE("hue shift round-trips within conversion rounding") {
    auto img = noise_image(16, 16, 41);
    Rect region = {0, 0, 16, 16};
    auto shifted = apply_color_adjustment(img, region, HueSaturationAdjust{30, 0, 0});
    auto back = apply_color_adjustment(shifted, region, HueSaturationAdjust{-30, 0, 0});
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            Rgb a = img.get(x, y), b = back.get(x, y);
            REQUIRE(std::abs(int(a.r) - int(b.r)) <= 2);
            REQUIRE(std::abs(int(a.g) - int(b.g)) <= 2);
            REQUIRE(std::abs(int(a.b) - int(b.b)) <= 2);
        }
}

TEST_CASE("color adjustments stay inside their region") {
    auto img = noise_image(30, 30, 51);
    Rect region = {6, 6, 12, 12};
    auto out = apply_color_adjustment(img, region, ColorBalanceAdjust{60, -40, 20});
    REQUIRE(identical_outside(img, out, region));
    out = apply_color_adjustment(img, region, CurvesAdjust{CurvesAdjust::Curve::LowerShadows});
    REQUIRE(identical_outside(img, out, region));
}

// --------------------------------------------------------------- effects

namespace {
RegionShape block_shape(const Rect& rect, const Rect& covered) {
    RegionShape s;
    s.rect = rect;
    s.coverage.assign(size_t(rect.w) * rect.h, 0);
    for (int y = 0; y < rect.h; ++y)
        for (int x = 0; x < rect.w; ++x)
            if (covered.contains(rect.x + x, rect.y + y))
                s.coverage[size_t(y) * rect.w + x] = 255;
    return s;
}
}  // namespace

TEST_CASE("zero-amount noise changes nothing") {
    auto img = noise_image(20, 20, 61);
    RegionShape shape;
    shape.rect = {2, 2, 10, 10};
    RngStream rng(1);
    auto res = apply_effect(img, shape, NoiseEffect{0.0, false, false}, rng);
    REQUIRE(res.image == img);
}

TEST_CASE("monochromatic noise moves all channels together") {
    ImageBuffer img(20, 20, {100, 150, 200});
    RegionShape shape;
    shape.rect = {0, 0, 20, 20};
    RngStream rng(2);
    auto res = apply_effect(img, shape, NoiseEffect{10.0, false, true}, rng);
    for (int y = 0; y < 20; ++y)
        for (int x = 0; x < 20; ++x) {
            Rgb a = img.get(x, y), b = res.image.get(x, y);
            int dr = int(b.r) - int(a.r), dg = int(b.g) - int(a.g), db = int(b.b) - int(a.b);
            REQUIRE(dr == dg);
            REQUIRE(dg == db);
        }
}

TEST_CASE("drop shadow reach bounds every modified pixel") {
    ImageBuffer img(80, 80, {240, 240, 240});
    Rect glyph = {35, 35, 10, 10};
    auto shape = block_shape({30, 30, 20, 20}, glyph);
    DropShadowEffect ds;
    ds.color = {10, 10, 10};
    ds.opacity = 23;
    ds.angle = 30;
    ds.distance = 7;
    ds.spread = 12;
    ds.size = 17;
    ds.noise = 0;
    RngStream rng(3);
    auto res = apply_effect(img, shape, ds, rng);
    int reach = effect_reach(EffectSpec{ds});
    for (int y = 0; y < 80; ++y)
        for (int x = 0; x < 80; ++x) {
            if (res.image.get(x, y) == img.get(x, y)) continue;
            // modified pixels lie within the shape rect dilated by the reach
            REQUIRE(x >= 30 - reach);
            REQUIRE(x < 50 + reach);
            REQUIRE(y >= 30 - reach);
            REQUIRE(y < 50 + reach);
            REQUIRE(res.effective.contains(x, y));
        }
    // and a shadow actually appeared below-right of the glyph
    bool any = false;
    for (int y = 45; y < 60 && !any; ++y)
        for (int x = 45; x < 60 && !any; ++x) any = !(res.image.get(x, y) == img.get(x, y));
    REQUIRE(any);
}

TEST_CASE("stroke bands hug the shape boundary") {
    ImageBuffer img(60, 60, {255, 255, 255});
    Rect glyph = {25, 25, 10, 10};
    auto shape = block_shape({20, 20, 20, 20}, glyph);
    StrokeEffect st;
    st.size = 2;
    st.position = StrokeEffect::Position::Outside;
    st.opacity = 100;
    st.color = {255, 0, 0};
    RngStream rng(4);
    auto res = apply_effect(img, shape, st, rng);
    // just outside the glyph: stroked
    REQUIRE(res.image.get(24, 30) == Rgb{255, 0, 0});
    REQUIRE(res.image.get(30, 23) == Rgb{255, 0, 0});
    // inside the glyph: untouched
    REQUIRE(res.image.get(30, 30) == img.get(30, 30));
    // far away: untouched
    REQUIRE(res.image.get(5, 5) == img.get(5, 5));
}

TEST_CASE("effects with a fixed stream are byte-reproducible") {
    auto img = noise_image(40, 40, 71);
    auto shape = block_shape({5, 5, 30, 30}, {10, 10, 20, 20});
    NoiseEffect n{20.0, true, false};
    RngStream r1(9), r2(9);
    auto a = apply_effect(img, shape, n, r1);
    auto b = apply_effect(img, shape, n, r2);
    REQUIRE(a.image == b.image);
}

TEST_CASE("shape-dependent effects demand a shape mask") {
    ImageBuffer img(20, 20, {0, 0, 0});
    RegionShape bare;
    bare.rect = {2, 2, 10, 10};
    RngStream rng(5);
    REQUIRE_THROWS(apply_effect(img, bare, StrokeEffect{}, rng));
    REQUIRE_THROWS(apply_effect(img, bare, DropShadowEffect{}, rng));
}

// --------------------------------------------------------------- removal

TEST_CASE("solid fill paints the region and only the region") {
    auto img = noise_image(30, 30, 81);
    Rect region = {8, 8, 10, 6};
    RngStream rng(6);
    auto out = apply_removal(img, region, SolidFillRemoval{{255, 255, 255}}, rng);
    for (int y = region.y; y < region.bottom(); ++y)
        for (int x = region.x; x < region.right(); ++x)
            REQUIRE(out.get(x, y) == Rgb{255, 255, 255});
    REQUIRE(identical_outside(img, out, region));
}

TEST_CASE("content-aware fill restores a uniform background exactly") {
    ImageBuffer img(40, 30, {210, 205, 200});
    img.fill_rect({15, 10, 8, 6}, {0, 0, 0});  // the text to remove
    RngStream rng(7);
    auto out = apply_removal(img, {15, 10, 8, 6}, ContentAwareRemoval{3}, rng);
    for (int y = 10; y < 16; ++y)
        for (int x = 15; x < 23; ++x) REQUIRE(out.get(x, y) == Rgb{210, 205, 200});
}

TEST_CASE("clone stamp at full opacity and flow copies bit-exactly") {
    auto img = noise_image(50, 40, 91);
    Rect region = {20, 15, 8, 6};
    RngStream rng(8);
    auto out = apply_removal(img, region, CloneStampRemoval{100.0, 100.0}, rng);
    // the copied patch must match some candidate source rect bit-exactly
    bool matched = false;
    for (const auto& src : fsts::detail::ring_candidates(img, region)) {
        bool all = true;
        for (int y = 0; y < region.h && all; ++y)
            for (int x = 0; x < region.w && all; ++x)
                all = out.get(region.x + x, region.y + y) == img.get(src.x + x, src.y + y);
        matched = matched || all;
    }
    REQUIRE(matched);
    REQUIRE(identical_outside(img, out, region));
}

TEST_CASE("healing brush matches destination surroundings in the mean") {
    // bright image, dark 1-px ring around the destination: every clone
    // source is uniform bright, so the tone match must pull the copied
    // patch down to the ring's level
    ImageBuffer img(80, 60, {180, 180, 180});
    Rect region = {30, 25, 8, 8};
    img.fill_rect(region.dilated(1), {40, 40, 40});
    img.fill_rect(region, {0, 0, 0});
    RngStream heal_rng(9), clone_rng(9);
    auto healed = apply_removal(img, region, HealingBrushRemoval{false}, heal_rng);
    auto cloned = apply_removal(img, region, CloneStampRemoval{100.0, 100.0}, clone_rng);
    for (int y = region.y; y < region.bottom(); ++y)
        for (int x = region.x; x < region.right(); ++x) {
            REQUIRE(cloned.get(x, y) == Rgb{180, 180, 180});
            REQUIRE(healed.get(x, y) == Rgb{40, 40, 40});
        }
    // replace mode skips the tone match
    RngStream rep_rng(9);
    auto replaced = apply_removal(img, region, HealingBrushRemoval{true}, rep_rng);
    REQUIRE(replaced.get(region.x, region.y) == Rgb{180, 180, 180});
}

TEST_CASE("removal needs a source ring") {
    ImageBuffer img(10, 10, {5, 5, 5});
    RngStream rng(10);
    REQUIRE_THROWS(apply_removal(img, {0, 0, 10, 10}, ContentAwareRemoval{1}, rng));
    REQUIRE_THROWS(apply_removal(img, {0, 0, 10, 10}, CloneStampRemoval{}, rng));
}
