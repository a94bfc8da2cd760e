#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsts/annotations.hpp"
#include "fsts/image.hpp"
#include "fsts/raster/color.hpp"
#include "fsts/raster/effects.hpp"
#include "fsts/raster/filters.hpp"
#include "fsts/raster/removal.hpp"
#include "fsts/raster/shape.hpp"
#include "fsts/raster/text.hpp"
#include "fsts/raster/transform.hpp"
#include "fsts/record.hpp"
#include "fsts/sampler.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Plan execution: one executor per tampering type, composing the raster
// primitives in table step order, plus ground-truth mask generation and the
// per-sample synthesis entry point.
//
// Randomness discipline: the plan is drawn from substream("plan"); item i
// executes against substream("exec", i). Replay rebuilds items from the
// SampleRecord and re-derives the same exec substreams, so it never depends
// on plan-time draws.

struct SourceEntry {
    std::string id;
    const ImageBuffer* image = nullptr;
    const std::vector<RegionAnnotation>* annotations = nullptr;
};

struct GeometryRecord {
    Rect rect;
    TamperType type;
};

struct SynthesisResult {
    ImageBuffer tampered;
    PixelMask mask;
    SampleRecord record;
};

namespace exec_detail {

inline const ResolvedChoice* find_by_variant(const std::vector<ResolvedChoice>& choices,
                                             std::string_view name) {
    for (const auto& c : choices)
        if (c.variant == name) return &c;
    return nullptr;
}

inline Rgb color_param(const ResolvedChoice& c, std::string_view name, Rgb fallback) {
    const ParamValue* v = c.find(name);
    return v && v->type == ParamValue::Type::Color ? v->color : fallback;
}

/// Scales a rect about its center by `factor`, keeping at least 1x1.
inline Rect scale_rect(const Rect& r, double factor, int img_w, int img_h) {
    int nw = std::max(1, static_cast<int>(std::lround(r.w * factor)));
    int nh = std::max(1, static_cast<int>(std::lround(r.h * factor)));
    int nx = r.x + (r.w - nw) / 2;
    int ny = r.y + (r.h - nh) / 2;
    Rect out = Rect{nx, ny, nw, nh}.clipped(img_w, img_h);
    return out.empty() ? r.clipped(img_w, img_h) : out;
}

// ----- typed-spec dispatch from resolved choices ---------------------------

inline std::optional<FilterSpec> filter_from_choice(const ResolvedChoice& c) {
    const std::string& v = c.variant;
    if (v == "gaussian-blur") return FilterSpec{GaussianFilter{c.real_or("radius", 1.0)}};
    if (v == "blur") return FilterSpec{BlurFilter{}};
    if (v == "blur-more") return FilterSpec{BlurMoreFilter{}};
    if (v == "mean-filter") return FilterSpec{MeanFilter{}};
    if (v == "motion-blur")
        return FilterSpec{MotionFilter{c.real_or("angle", 0.0),
                                       static_cast<int>(c.int_or("distance", 1))}};
    if (v == "sharpen") {
        SharpenFilter s;
        s.amount = c.real_or("strength", c.real_or("amount", 100.0));
        s.radius = c.real_or("radius", 1.0);
        s.threshold = c.real_or("threshold", 0.0);
        s.iterations = static_cast<int>(c.int_or("iterations", 1));
        return FilterSpec{s};
    }
    if (v == "custom-convolution") {
        ConvolutionFilter f;
        const ParamValue* k = c.find("kernel");
        if (k && k->type == ParamValue::Type::IntList)
            for (size_t i = 0; i < std::min<size_t>(25, k->list.size()); ++i)
                f.kernel[i] = k->list[i];
        f.scale = static_cast<int>(c.int_or("scale", 1));
        if (f.scale == 0) f.scale = 1;
        f.offset = static_cast<int>(c.int_or("offset", 0));
        return FilterSpec{f};
    }
    if (v == "smart-blur") {
        SmartBlurFilter s;
        s.radius = c.real_or("radius", 3.0);
        s.threshold = c.real_or("threshold", 5.0);
        std::string q = c.text_or("quality", "high");
        s.quality = q == "high" ? SmartBlurFilter::Quality::High
                    : q == "medium" ? SmartBlurFilter::Quality::Medium
                                    : SmartBlurFilter::Quality::Low;
        std::string m = c.text_or("mode", "normal");
        s.mode = m == "edge-preservation" ? SmartBlurFilter::Mode::EdgePreservation
                 : m == "stroke-enhancement" ? SmartBlurFilter::Mode::StrokeEnhancement
                                             : SmartBlurFilter::Mode::Normal;
        return FilterSpec{s};
    }
    if (v == "surface-blur")
        return FilterSpec{SurfaceBlurFilter{static_cast<int>(c.int_or("radius", 5)),
                                            c.real_or("threshold", 15.0)}};
    if (v == "radial-blur") {
        RadialBlurFilter r;
        r.method = c.text_or("method", "spin") == "zoom" ? RadialBlurFilter::Method::Zoom
                                                         : RadialBlurFilter::Method::Spin;
        std::string q = c.text_or("quality", "good");
        r.quality = q == "best" ? RadialBlurFilter::Quality::Best
                    : q == "draft" ? RadialBlurFilter::Quality::Draft
                                   : RadialBlurFilter::Quality::Good;
        return FilterSpec{r};
    }
    if (v == "lens-blur") {
        LensBlurFilter l;
        std::string shape = c.text_or("aperture-shape", "hexagon");
        l.aperture_sides = shape == "triangle" ? 3
                           : shape == "quadrilateral" ? 4
                           : shape == "pentagon" ? 5
                           : shape == "hexagon" ? 6
                           : shape == "heptagon" ? 7
                                                 : 8;
        l.aperture_radius = c.real_or("aperture-radius", 0.5);
        l.blade_curvature = c.real_or("blade-curvature", 0.0);
        l.rotation = c.real_or("rotation", 0.0);
        l.brightness = c.real_or("brightness", 100.0);
        l.threshold = c.real_or("threshold", 100.0);
        l.noise_amount = c.real_or("amount", 0.0);
        l.noise_gaussian = c.text_or("distribution", "uniform") == "gaussian";
        return FilterSpec{l};
    }
    return std::nullopt;
}

inline std::optional<ColorSpec> color_from_choice(const ResolvedChoice& c) {
    const std::string& v = c.variant;
    if (v == "color-balance")
        return ColorSpec{ColorBalanceAdjust{static_cast<int>(c.int_or("cyan-red", 0)),
                                            static_cast<int>(c.int_or("magenta-green", 0)),
                                            static_cast<int>(c.int_or("yellow-blue", 0))}};
    if (v == "color-curves")
        return ColorSpec{CurvesAdjust{c.text_or("curve", "raise-highlights") ==
                                              "lower-shadows"
                                          ? CurvesAdjust::Curve::LowerShadows
                                          : CurvesAdjust::Curve::RaiseHighlights}};
    if (v == "hue-saturation")
        return ColorSpec{HueSaturationAdjust{static_cast<int>(c.int_or("hue", 0)),
                                             static_cast<int>(c.int_or("saturation", 0)),
                                             static_cast<int>(c.int_or("lightness", 0))}};
    return std::nullopt;
}

inline std::optional<EffectSpec> effect_from_choice(const ResolvedChoice& c) {
    const std::string& v = c.variant;
    if (v == "stroke") {
        StrokeEffect s;
        s.size = static_cast<int>(c.int_or("size", 1));
        std::string pos = c.text_or("position", "outside");
        s.position = pos == "inside" ? StrokeEffect::Position::Inside
                     : pos == "center" ? StrokeEffect::Position::Center
                                       : StrokeEffect::Position::Outside;
        s.blend = c.text_or("blend-mode", "normal") == "multiply"
                      ? StrokeEffect::Blend::Multiply
                      : StrokeEffect::Blend::Normal;
        s.opacity = c.real_or("opacity", 100.0);
        s.color = color_param(c, "color", {0, 0, 0});
        return EffectSpec{s};
    }
    if (v == "drop-shadow") {
        DropShadowEffect d;
        std::string blend = c.text_or("blend-mode", "multiply");
        d.blend = blend == "normal" ? DropShadowEffect::Blend::Normal
                  : blend == "darken" ? DropShadowEffect::Blend::Darken
                                      : DropShadowEffect::Blend::Multiply;
        d.color = color_param(c, "color", {0, 0, 0});
        d.opacity = c.real_or("opacity", 15.0);
        d.angle = c.real_or("angle", 0.0);
        d.distance = static_cast<int>(c.int_or("distance", 3));
        d.spread = c.real_or("spread", 5.0);
        d.size = static_cast<int>(c.int_or("size", 5));
        d.noise = c.real_or("noise", 0.0);
        return EffectSpec{d};
    }
    if (v == "outer-glow") {
        OuterGlowEffect g;
        g.color = color_param(c, "color", {83, 79, 79});
        g.opacity = c.real_or("opacity", 17.0);
        g.noise = c.real_or("noise", 0.0);
        g.spread = static_cast<int>(c.int_or("spread", 5));
        return EffectSpec{g};
    }
    if (v == "noise") {
        NoiseEffect n;
        n.amount = c.real_or("amount", 0.0);
        n.gaussian = c.text_or("distribution", "uniform") == "gaussian";
        n.monochromatic = c.text_or("monochromatic", "no") == "yes";
        return EffectSpec{n};
    }
    return std::nullopt;
}

inline bool removal_variant(const std::string& name) {
    return name == "content-aware-fill" || name == "solid-color-fill" ||
           name == "background-clone" || name == "clone-stamp" ||
           name == "healing-brush";
}

inline RemovalSpec removal_from_choice(const ResolvedChoice& c) {
    const std::string& v = c.variant;
    if (v == "content-aware-fill")
        return ContentAwareRemoval{static_cast<int>(c.int_or("iterations", 3))};
    if (v == "solid-color-fill")
        return SolidFillRemoval{color_param(c, "color", {255, 255, 255})};
    if (v == "background-clone") return BackgroundCloneRemoval{};
    if (v == "clone-stamp")
        return CloneStampRemoval{c.real_or("opacity", 100.0), c.real_or("flow", 100.0)};
    if (v == "healing-brush")
        return HealingBrushRemoval{c.text_or("mode", "normal") == "replace"};
    throw Error("unknown removal variant '" + v + "'");
}

/// Applies the item's post-processing choices in order, confined to `rect`
/// (filters/color) or keyed to `shape` (layer effects). Extends `effective`.
inline void apply_concealment(ImageBuffer& work, const Rect& rect, const RegionShape& shape,
                              const std::vector<ResolvedChoice>& choices, RngStream& rng,
                              Rect& effective) {
    for (const auto& c : choices) {
        if (c.phase != StepPhase::Post) continue;
        if (auto filter = filter_from_choice(c)) {
            work = apply_filter(work, rect, *filter);
            effective = effective.united(rect.clipped(work.width(), work.height()));
        } else if (auto color = color_from_choice(c)) {
            work = apply_color_adjustment(work, rect, *color);
            effective = effective.united(rect.clipped(work.width(), work.height()));
        } else if (auto effect = effect_from_choice(c)) {
            auto res = apply_effect(work, shape, *effect, rng);
            work = std::move(res.image);
            effective = effective.united(res.effective);
        }
    }
}

/// Pastes a patch centered on `target`, returning the placed rect and the
/// pasted coverage as an image-space shape for subsequent effects.
inline std::pair<Rect, RegionShape> paste_centered(ImageBuffer& work, const Patch& patch,
                                                   const Rect& target) {
    int px = target.x + (target.w - patch.image.width()) / 2;
    int py = target.y + (target.h - patch.image.height()) / 2;
    Rect placed = composite_paste(work, patch, px, py);
    RegionShape shape;
    shape.rect = placed;
    shape.coverage.assign(static_cast<size_t>(placed.w) * placed.h, 0);
    for (int y = 0; y < placed.h; ++y)
        for (int x = 0; x < placed.w; ++x) {
            int lx = placed.x + x - px, ly = placed.y + y - py;
            shape.coverage[static_cast<size_t>(y) * placed.w + x] =
                patch.coverage_at(lx, ly);
        }
    return {placed, shape};
}

/// Estimated ink color of a text-bearing rect: the mean of the darkest (on
/// light backgrounds) or brightest (on dark) quartile of its pixels.
inline Rgb estimate_text_color(const ImageBuffer& img, const Rect& rect_in) {
    Rect rect = rect_in.clipped(img.width(), img.height());
    if (rect.empty()) throw Error("estimate_text_color: empty rect");
    std::vector<std::pair<double, Rgb>> pixels;
    pixels.reserve(static_cast<size_t>(rect.w) * rect.h);
    double mean = 0.0;
    for (int y = rect.y; y < rect.bottom(); ++y)
        for (int x = rect.x; x < rect.right(); ++x) {
            Rgb c = img.get(x, y);
            double luma = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
            pixels.push_back({luma, c});
            mean += luma;
        }
    mean /= pixels.size();
    bool light_bg = mean > 128.0;
    std::sort(pixels.begin(), pixels.end(),
              [&](const auto& a, const auto& b) { return a.first < b.first; });
    size_t quartile = std::max<size_t>(1, pixels.size() / 4);
    size_t begin = light_bg ? 0 : pixels.size() - quartile;
    double acc[3] = {0, 0, 0};
    for (size_t i = begin; i < begin + quartile; ++i) {
        acc[0] += pixels[i].second.r;
        acc[1] += pixels[i].second.g;
        acc[2] += pixels[i].second.b;
    }
    return {static_cast<uint8_t>(std::lround(acc[0] / quartile)),
            static_cast<uint8_t>(std::lround(acc[1] / quartile)),
            static_cast<uint8_t>(std::lround(acc[2] / quartile))};
}

struct TextPaint {
    Rgb color;
    TextStyle style;
};

/// Resolves the text color for insertion/replacement: the color-adaptation
/// choice samples real ink (adapted_from when available), the safety-color
/// choice draws from its sampled safety ranges by background luma, and with
/// neither resolved the adapted color wins (safety constants as a last
/// resort).
inline Rgb resolve_text_color(const ImageBuffer& work, const Rect& target,
                              const std::vector<ResolvedChoice>& choices,
                              std::optional<Rgb> adapted) {
    bool light_bg = mean_luma(work, target) > 128.0;
    const ResolvedChoice* adapt = find_by_variant(choices, "color-adaptation");
    const ResolvedChoice* safety = find_by_variant(choices, "safety-color");
    if (adapt && adapted) return *adapted;
    if (safety) {
        Rgb light = color_param(*safety, "light-background", {32, 32, 32});
        Rgb dark = color_param(*safety, "dark-background", {224, 224, 224});
        return light_bg ? light : dark;
    }
    if (adapted) return *adapted;
    return light_bg ? Rgb{32, 32, 32} : Rgb{224, 224, 224};
}

}  // namespace exec_detail

// ---------------------------------------------------------------- executors

/// Copies the item's source region (optionally shape-extracted), transforms
/// it, pastes at the target, and conceals. Returns the effective geometry.
inline Rect execute_copy_move(ImageBuffer& work, const ItemRecord& item, RngStream& rng,
                              const FontLibrary& = FontLibrary::builtin()) {
    using namespace exec_detail;
    if (!item.copy_source) throw Error("copy-move item without a source region");
    Rect src = item.copy_source->rect.clipped(work.width(), work.height());
    Rect target = item.target.rect;
    if (src.empty() || target.empty()) throw Error("copy-move: degenerate geometry");

    Patch patch{work.crop(src), {}};
    if (const auto* mw = find_by_variant(item.choices, "magic-wand")) {
        MagicWandExtract ex;
        ex.tolerance = static_cast<int>(mw->int_or("tolerance", 20));
        ex.contiguous = mw->text_or("contiguous", "yes") == "yes";
        ex.anti_alias = mw->text_or("anti-alias", "no") == "yes";
        patch.coverage = extract_text_shape(work, src, ShapeExtractSpec{ex}).coverage;
    } else if (const auto* lv = find_by_variant(item.choices, "channel-levels")) {
        LevelsExtract ex;
        ex.channel = lv->text_or("channel", "red") == "green"
                         ? 1
                         : lv->text_or("channel", "red") == "blue" ? 2 : 0;
        ex.input_lo = static_cast<int>(lv->int_or("input-lo", 130));
        ex.input_hi = static_cast<int>(lv->int_or("input-hi", 237));
        patch.coverage = extract_text_shape(work, src, ShapeExtractSpec{ex}).coverage;
    }

    TransformSpec t;
    if (const auto* sc = find_by_variant(item.choices, "region-scaling"))
        if (sc->text_or("scaling-factor", "") == "adaptive-to-paste-region")
            t.adapt_to = {{target.w, target.h}};
    if (const auto* rot = find_by_variant(item.choices, "region-rotation"))
        t.rotation_deg = rot->real_or("angle", 0.0);
    patch = transform_region(patch, t);

    auto [placed, shape] = paste_centered(work, patch, target);
    Rect effective = placed;
    apply_concealment(work, placed, shape, item.choices, rng, effective);
    return effective;
}

/// Splicing: like copy-move, but the patch comes from a source image that
/// was resolved into the record (cross-image contract).
inline Rect execute_splicing(ImageBuffer& work, const ImageBuffer& source,
                             const ItemRecord& item, RngStream& rng) {
    using namespace exec_detail;
    Rect src = item.splice_region.clipped(source.width(), source.height());
    Rect target = item.target.rect;
    if (src.empty() || target.empty()) throw Error("splicing: degenerate geometry");

    Patch patch{source.crop(src), {}};
    if (const auto* mw = find_by_variant(item.choices, "magic-wand")) {
        MagicWandExtract ex;
        ex.tolerance = static_cast<int>(mw->int_or("tolerance", 20));
        ex.contiguous = mw->text_or("contiguous", "yes") == "yes";
        ex.anti_alias = mw->text_or("anti-alias", "no") == "yes";
        patch.coverage = extract_text_shape(source, src, ShapeExtractSpec{ex}).coverage;
    } else if (const auto* lv = find_by_variant(item.choices, "channel-levels")) {
        LevelsExtract ex;
        ex.channel = 0;
        ex.input_lo = static_cast<int>(lv->int_or("input-lo", 130));
        ex.input_hi = static_cast<int>(lv->int_or("input-hi", 237));
        patch.coverage = extract_text_shape(source, src, ShapeExtractSpec{ex}).coverage;
    }

    TransformSpec t;
    if (const auto* sc = find_by_variant(item.choices, "region-scaling"))
        if (sc->text_or("scaling-factor", "") == "adaptive-to-paste-region")
            t.adapt_to = {{target.w, target.h}};
    if (const auto* rot = find_by_variant(item.choices, "region-rotation"))
        t.rotation_deg = rot->real_or("angle", 0.0);
    patch = transform_region(patch, t);

    auto [placed, shape] = paste_centered(work, patch, target);
    Rect effective = placed;
    apply_concealment(work, placed, shape, item.choices, rng, effective);
    return effective;
}

/// Erases the target region with the sampled removal variant, then applies
/// the geometric-transformation step.
inline Rect execute_removal(ImageBuffer& work, const ItemRecord& item, RngStream& rng) {
    using namespace exec_detail;
    Rect region = item.target.rect.clipped(work.width(), work.height());
    if (region.empty()) throw Error("removal: degenerate region");

    if (const auto* sc = find_by_variant(item.choices, "region-scaling"))
        region = scale_rect(region, 1.0 + sc->real_or("adaptive-jitter", 0.0) / 100.0,
                            work.width(), work.height());

    const ResolvedChoice* removal = nullptr;
    for (const auto& c : item.choices)
        if (removal_variant(c.variant)) removal = &c;
    if (!removal) throw Error("removal item without a content-removal choice");
    work = apply_removal(work, region, removal_from_choice(*removal), rng);
    Rect effective = region;

    if (const auto* rot = find_by_variant(item.choices, "region-rotation")) {
        double angle = rot->real_or("angle", 0.0);
        if (angle != 0.0) {
            Patch patch{work.crop(region), {}};
            TransformSpec t;
            t.rotation_deg = angle;
            patch = transform_region(patch, t);
            auto [placed, _] = paste_centered(work, patch, region);
            effective = effective.united(placed);
        }
    }
    return effective;
}

namespace exec_detail {

/// Shared by insertion and replacement: renders the item's text into
/// `region` with the resolved style/color, handling the optional rotation by
/// rendering to a patch, then applies concealment. Returns the effective
/// geometry.
inline Rect insert_text_and_conceal(ImageBuffer& work, const ItemRecord& item, Rect region,
                                    Rgb text_color, RngStream& rng,
                                    const FontLibrary& fonts) {
    TextStyle style;
    if (const auto* fp = find_by_variant(item.choices, "font-properties")) {
        style.family = fp->text_or("font", style.family);
        style.anti_alias = anti_alias_from_string(fp->text_or("anti-aliasing", "smooth"));
    }
    style.color = text_color;

    double rotation = 0.0;
    if (const auto* rot = find_by_variant(item.choices, "region-rotation"))
        rotation = rot->real_or("angle", 0.0);

    Rect effective;
    RegionShape glyphs;
    if (rotation == 0.0) {
        auto res = render_text_into(work, region, item.text, style, fonts);
        work = std::move(res.image);
        glyphs = std::move(res.glyphs);
        effective = glyphs.rect;
    } else {
        // render to a flat-color patch, rotate it with its coverage, paste
        ImageBuffer scratch(region.w, region.h, {255, 255, 255});
        ImageBuffer canvas(region.w, region.h);
        for (int y = 0; y < region.h; ++y)
            for (int x = 0; x < region.w; ++x) canvas.set(x, y, text_color);
        auto res = render_text_into(scratch, {0, 0, region.w, region.h}, item.text, style);
        Patch patch{std::move(canvas), std::move(res.glyphs.coverage)};
        TransformSpec t;
        t.rotation_deg = rotation;
        patch = transform_region(patch, t);
        auto [placed, shape] = paste_centered(work, patch, region);
        glyphs = std::move(shape);
        effective = placed;
    }
    apply_concealment(work, effective, glyphs, item.choices, rng, effective);
    return effective;
}

}  // namespace exec_detail

/// Renders forged text into a non-text region. The resolved ink color is
/// written back into the record so replay matches without re-deriving it
/// from annotations.
inline Rect execute_insertion(ImageBuffer& work, ItemRecord& item, RngStream& rng,
                              const FontLibrary& fonts = FontLibrary::builtin(),
                              const std::vector<RegionAnnotation>* annotations = nullptr) {
    using namespace exec_detail;
    Rect region = item.target.rect.clipped(work.width(), work.height());
    if (region.empty()) throw Error("insertion: degenerate region");
    if (const auto* sc = find_by_variant(item.choices, "region-scaling"))
        region = scale_rect(region, 1.0 + sc->real_or("adaptive-jitter", 0.0) / 100.0,
                            work.width(), work.height());
    if (region.h < 4) throw Error("insertion: region too small for minimum glyph size");

    if (!item.ink) {
        // adapted ink color comes from the nearest annotated text region
        std::optional<Rgb> adapted;
        if (annotations) {
            const RegionAnnotation* best = nullptr;
            double best_d = 0.0;
            for (const auto& a : *annotations) {
                if (a.kind != RegionKind::Text) continue;
                if (a.rect.clipped(work.width(), work.height()).empty()) continue;
                double dx = (a.rect.x + a.rect.w / 2.0) - (region.x + region.w / 2.0);
                double dy = (a.rect.y + a.rect.h / 2.0) - (region.y + region.h / 2.0);
                double d = dx * dx + dy * dy;
                if (!best || d < best_d) {
                    best = &a;
                    best_d = d;
                }
            }
            if (best) adapted = estimate_text_color(work, best->rect);
        }
        item.ink = resolve_text_color(work, region, item.choices, adapted);
    }
    return insert_text_and_conceal(work, item, region, *item.ink, rng, fonts);
}

/// Erases the original text, then renders replacement text in place.
inline Rect execute_replacement(ImageBuffer& work, ItemRecord& item, RngStream& rng,
                                const FontLibrary& fonts = FontLibrary::builtin()) {
    using namespace exec_detail;
    Rect region = item.target.rect.clipped(work.width(), work.height());
    if (region.empty()) throw Error("replacement: degenerate region");

    // capture the original ink before erasing it
    Rgb original_ink = estimate_text_color(work, region);

    const ResolvedChoice* removal = nullptr;
    for (const auto& c : item.choices)
        if (removal_variant(c.variant)) removal = &c;
    if (!removal) throw Error("replacement item without a content-removal choice");
    work = apply_removal(work, region, removal_from_choice(*removal), rng);
    Rect effective = region;

    Rect text_region = region;
    if (const auto* sc = find_by_variant(item.choices, "region-scaling"))
        text_region = scale_rect(region, 1.0 + sc->real_or("adaptive-jitter", 0.0) / 100.0,
                                 work.width(), work.height());
    if (text_region.h < 4) text_region = region;

    if (!item.ink)
        item.ink = resolve_text_color(work, text_region, item.choices, original_ink);
    effective = effective.united(
        insert_text_and_conceal(work, item, text_region, *item.ink, rng, fonts));
    return effective;
}

// ------------------------------------------------------------------- masks

/// Binarized difference mask: 1 where the max-channel |tampered - original|
/// reaches tau, closed 3x3 to fill anti-aliasing pinholes. Asserts the mask
/// stays within the union of effective geometries dilated by one pixel.
inline PixelMask generate_mask(const ImageBuffer& original, const ImageBuffer& tampered,
                               const std::vector<GeometryRecord>& geometries, int tau = 1) {
    if (original.width() != tampered.width() || original.height() != tampered.height())
        throw Error("generate_mask: dimension mismatch");
    PixelMask mask(original.width(), original.height());
    for (int y = 0; y < original.height(); ++y)
        for (int x = 0; x < original.width(); ++x) {
            Rgb a = original.get(x, y), b = tampered.get(x, y);
            int d = std::max({std::abs(int(a.r) - int(b.r)), std::abs(int(a.g) - int(b.g)),
                              std::abs(int(a.b) - int(b.b))});
            mask.set(x, y, d >= tau);
        }
    mask = close3x3(mask);

    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.get(x, y)) continue;
            bool contained = false;
            for (const auto& g : geometries)
                if (g.rect.dilated(1).contains(x, y)) {
                    contained = true;
                    break;
                }
            if (!contained)
                throw Error("generate_mask: mask pixel (" + std::to_string(x) + "," +
                            std::to_string(y) + ") outside every effective geometry");
        }
    return mask;
}

// --------------------------------------------------------------- synthesis

/// Lowest-variance sliding windows that avoid existing annotations; used
/// when no non-text region is annotated so insertion still has a target.
inline std::vector<RegionAnnotation> detect_blank_regions(
    const ImageBuffer& img, const std::vector<RegionAnnotation>& existing, int count = 3) {
    int w = std::clamp(img.width() / 6, 16, 96);
    int h = std::clamp(img.height() / 10, 8, 32);
    if (w >= img.width() || h >= img.height()) return {};
    struct Scored {
        double var;
        Rect rect;
    };
    std::vector<Scored> windows;
    for (int y = 0; y + h <= img.height(); y += std::max(1, h / 2))
        for (int x = 0; x + w <= img.width(); x += std::max(1, w / 2)) {
            Rect r = {x, y, w, h};
            bool clash = false;
            for (const auto& a : existing) clash = clash || r.intersects(a.rect);
            if (clash) continue;
            windows.push_back({detail::rect_variance(img, r), r});
        }
    std::sort(windows.begin(), windows.end(), [](const Scored& a, const Scored& b) {
        if (a.var != b.var) return a.var < b.var;
        if (a.rect.y != b.rect.y) return a.rect.y < b.rect.y;
        return a.rect.x < b.rect.x;
    });
    std::vector<RegionAnnotation> out;
    for (const auto& s : windows) {
        if (static_cast<int>(out.size()) >= count) break;
        bool clash = false;
        for (const auto& o : out) clash = clash || s.rect.intersects(o.rect);
        if (clash) continue;
        RegionAnnotation a;
        a.id = "auto-blank-" + std::to_string(out.size() + 1);
        a.rect = s.rect;
        a.kind = RegionKind::NonText;
        out.push_back(std::move(a));
    }
    return out;
}

namespace exec_detail {

/// Executes one recorded item against the working buffer. Fills
/// item.effective.
inline void execute_item(ImageBuffer& work, ItemRecord& item, RngStream& exec_rng,
                         const std::vector<SourceEntry>& pool, const FontLibrary& fonts,
                         const std::vector<RegionAnnotation>* annotations) {
    switch (item.type) {
        case TamperType::CopyMove:
            item.effective = execute_copy_move(work, item, exec_rng, fonts);
            break;
        case TamperType::Splicing: {
            const ImageBuffer* src = nullptr;
            for (const auto& e : pool)
                if (e.id == item.splice_image) src = e.image;
            if (!src) throw Error("splicing: source image '" + item.splice_image +
                                  "' missing from pool");
            item.effective = execute_splicing(work, *src, item, exec_rng);
            break;
        }
        case TamperType::Removal:
            item.effective = execute_removal(work, item, exec_rng);
            break;
        case TamperType::Insertion:
            item.effective = execute_insertion(work, item, exec_rng, fonts, annotations);
            break;
        case TamperType::Replacement:
            item.effective = execute_replacement(work, item, exec_rng, fonts);
            break;
    }
}

}  // namespace exec_detail

/// Synthesizes one tampered sample: samples a plan, executes it on a working
/// copy, and derives the ground-truth mask. Deterministic in all inputs.
inline SynthesisResult synthesize_sample(const ImageBuffer& original,
                                         const std::vector<SourceEntry>& source_pool,
                                         const PopulationModel& model,
                                         const ParameterTable& table,
                                         std::vector<RegionAnnotation> regions,
                                         uint64_t master_seed, const std::string& sample_id,
                                         const FontLibrary& fonts = FontLibrary::builtin(),
                                         const std::string& source_id = "") {
    auto t0 = std::chrono::steady_clock::now();

    bool has_nontext = false;
    for (const auto& r : regions) has_nontext = has_nontext || r.kind == RegionKind::NonText;
    if (!has_nontext)
        for (auto& a : detect_blank_regions(original, regions)) regions.push_back(std::move(a));

    RngStream stream = derive_stream(master_seed, sample_id);
    RngStream plan_rng = stream.substream("plan");
    PlanContext ctx{original.width(), original.height()};
    TamperingPlan plan = sample_plan(model, table, regions, plan_rng, sample_id, ctx);

    // pool candidates for splicing, ordered by id for determinism
    std::vector<const SourceEntry*> candidates;
    for (const auto& e : source_pool)
        if (e.id != source_id && e.annotations) {
            bool has_text = false;
            for (const auto& a : *e.annotations)
                has_text = has_text || a.kind == RegionKind::Text;
            if (has_text) candidates.push_back(&e);
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const SourceEntry* a, const SourceEntry* b) { return a->id < b->id; });

    SampleRecord record;
    record.sample_id = sample_id;
    record.master_seed = master_seed;
    record.source_image = source_id;

    ImageBuffer work = original;
    std::vector<GeometryRecord> geometries;
    for (size_t i = 0; i < plan.items.size(); ++i) {
        const PlanItem& p = plan.items[i];
        ItemRecord item;
        item.type = p.type;
        item.target = p.target;
        item.copy_source = p.copy_source;
        item.text = p.text;
        item.choices = p.choices;
        if (p.type == TamperType::Splicing) {
            if (candidates.empty())
                throw Error("splicing item but the source pool is empty (sample " +
                            sample_id + ")");
            const SourceEntry& src =
                *candidates[p.splice_source_draw % candidates.size()];
            std::vector<const RegionAnnotation*> text_regions;
            for (const auto& a : *src.annotations)
                if (a.kind == RegionKind::Text &&
                    !a.rect.clipped(src.image->width(), src.image->height()).empty())
                    text_regions.push_back(&a);
            if (text_regions.empty())
                throw Error("splicing source '" + src.id + "' has no text regions");
            item.splice_image = src.id;
            item.splice_region =
                text_regions[p.splice_region_draw % text_regions.size()]->rect;
        }
        RngStream exec_rng = stream.substream("exec", i);
        try {
            exec_detail::execute_item(work, item, exec_rng, source_pool, fonts, &regions);
        } catch (const Error& e) {
            throw Error("plan item " + std::to_string(i) + " (" +
                        std::string(to_string(item.type)) + ", region '" + item.target.id +
                        "'): " + e.what());
        }
        geometries.push_back({item.effective, item.type});
        record.items.push_back(std::move(item));
    }

    SynthesisResult result{std::move(work), PixelMask(1, 1), std::move(record)};
    result.mask = generate_mask(original, result.tampered, geometries);
    result.record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

/// Re-executes a SampleRecord against the same inputs. Byte-identical to the
/// original run.
inline SynthesisResult replay_sample(const SampleRecord& record, const ImageBuffer& original,
                                     const std::vector<SourceEntry>& source_pool,
                                     const FontLibrary& fonts = FontLibrary::builtin()) {
    RngStream stream = derive_stream(record.master_seed, record.sample_id);
    ImageBuffer work = original;
    std::vector<GeometryRecord> geometries;
    SampleRecord replayed = record;
    for (size_t i = 0; i < replayed.items.size(); ++i) {
        RngStream exec_rng = stream.substream("exec", i);
        exec_detail::execute_item(work, replayed.items[i], exec_rng, source_pool, fonts,
                                  nullptr);
        geometries.push_back({replayed.items[i].effective, replayed.items[i].type});
    }
    SynthesisResult result{std::move(work), PixelMask(1, 1), std::move(replayed)};
    result.mask = generate_mask(original, result.tampered, geometries);
    return result;
}

/// Fig. 6 mask color convention, stored as metadata for downstream tools.
inline Rgb mask_color_for(TamperType t) {
    switch (t) {
        case TamperType::CopyMove: return {0, 255, 255};
        case TamperType::Splicing: return {0, 255, 0};
        case TamperType::Removal: return {0, 0, 255};
        case TamperType::Insertion: return {255, 255, 0};
        case TamperType::Replacement: return {255, 0, 0};
    }
    return {255, 255, 255};
}

}  // namespace fsts
