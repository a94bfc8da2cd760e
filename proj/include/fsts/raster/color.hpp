#pragma once

#include <array>
#include <cmath>
#include <variant>

#include "fsts/image.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Region-confined color adjustments.
//
//   balance   midtone-weighted channel shifts: delta = slider/100 * 30 * w(v)
//             with w(v) = 1 - |v - 128| / 128 (zero effect at black/white)
//   curves    fixed monotone lookups:
//               raise-highlights: v <= 128 -> v, else v + (v-128)(255-v)/256
//               lower-shadows:    v >= 128 -> v, else v - (128-v) v / 256
//   hue/sat   standard HSL roundtrip; hue in degrees, saturation scales
//             relatively, lightness shifts by slider/200
//   levels    linear remap of one channel from [in_lo, in_hi] to
//             [out_lo, out_hi], clamped

struct ColorBalanceAdjust {
    // midtones only (the table's sole tonal range); sliders -100..100
    int cyan_red = 0;
    int magenta_green = 0;
    int yellow_blue = 0;
};

struct CurvesAdjust {
    enum class Curve { RaiseHighlights, LowerShadows } curve = Curve::RaiseHighlights;
};

struct HueSaturationAdjust {
    int hue = 0;         // -30..30 degrees
    int saturation = 0;  // -20..20
    int lightness = 0;   // -30..30
};

struct LevelsAdjust {
    int channel = 0;  // 0..2
    int input_lo = 0, input_hi = 255;
    int output_lo = 0, output_hi = 255;
};

using ColorSpec =
    std::variant<ColorBalanceAdjust, CurvesAdjust, HueSaturationAdjust, LevelsAdjust>;

/// 256-entry lookup for the named curve. Monotone non-decreasing.
inline std::array<uint8_t, 256> curves_lut(CurvesAdjust::Curve curve) {
    std::array<uint8_t, 256> lut;
    for (int v = 0; v < 256; ++v) {
        double out = v;
        if (curve == CurvesAdjust::Curve::RaiseHighlights) {
            if (v > 128) out = v + (v - 128.0) * (255.0 - v) / 256.0;
        } else {
            if (v < 128) out = v - (128.0 - v) * v / 256.0;
        }
        lut[static_cast<size_t>(v)] =
            static_cast<uint8_t>(std::lround(std::clamp(out, 0.0, 255.0)));
    }
    return lut;
}

inline std::array<uint8_t, 256> levels_lut(int in_lo, int in_hi, int out_lo, int out_hi) {
    if (in_lo >= in_hi) throw Error("levels: input_lo must be below input_hi");
    std::array<uint8_t, 256> lut;
    for (int v = 0; v < 256; ++v) {
        double t = std::clamp((v - in_lo) / double(in_hi - in_lo), 0.0, 1.0);
        lut[static_cast<size_t>(v)] =
            static_cast<uint8_t>(std::lround(out_lo + t * (out_hi - out_lo)));
    }
    return lut;
}

namespace detail {

struct Hsl {
    double h, s, l;  // h in [0,360), s/l in [0,1]
};

inline Hsl rgb_to_hsl(Rgb c) {
    double r = c.r / 255.0, g = c.g / 255.0, b = c.b / 255.0;
    double mx = std::max({r, g, b}), mn = std::min({r, g, b});
    double l = (mx + mn) / 2.0;
    double h = 0.0, s = 0.0;
    if (mx > mn) {
        double d = mx - mn;
        s = l > 0.5 ? d / (2.0 - mx - mn) : d / (mx + mn);
        if (mx == r) h = (g - b) / d + (g < b ? 6.0 : 0.0);
        else if (mx == g) h = (b - r) / d + 2.0;
        else h = (r - g) / d + 4.0;
        h *= 60.0;
    }
    return {h, s, l};
}

inline double hue_to_rgb(double p, double q, double t) {
    if (t < 0) t += 1;
    if (t > 1) t -= 1;
    if (t < 1.0 / 6) return p + (q - p) * 6 * t;
    if (t < 1.0 / 2) return q;
    if (t < 2.0 / 3) return p + (q - p) * (2.0 / 3 - t) * 6;
    return p;
}

inline Rgb hsl_to_rgb(const Hsl& hsl) {
    double h = hsl.h / 360.0, s = hsl.s, l = hsl.l;
    double r, g, b;
    if (s <= 0.0) {
        r = g = b = l;
    } else {
        double q = l < 0.5 ? l * (1 + s) : l + s - l * s;
        double p = 2 * l - q;
        r = hue_to_rgb(p, q, h + 1.0 / 3);
        g = hue_to_rgb(p, q, h);
        b = hue_to_rgb(p, q, h - 1.0 / 3);
    }
    auto q8 = [](double v) {
        return static_cast<uint8_t>(std::lround(std::clamp(v * 255.0, 0.0, 255.0)));
    };
    return {q8(r), q8(g), q8(b)};
}

}  // namespace detail

inline ImageBuffer apply_color_adjustment(const ImageBuffer& img, const Rect& region_in,
                                          const ColorSpec& spec) {
    Rect region = region_in.clipped(img.width(), img.height());
    if (region.empty()) throw Error("apply_color_adjustment: empty region");
    ImageBuffer out = img;

    if (std::holds_alternative<ColorBalanceAdjust>(spec)) {
        const auto& cb = std::get<ColorBalanceAdjust>(spec);
        if (cb.cyan_red == 0 && cb.magenta_green == 0 && cb.yellow_blue == 0) return out;
        const int sliders[3] = {cb.cyan_red, cb.magenta_green, cb.yellow_blue};
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x)
                for (int c = 0; c < 3; ++c) {
                    int v = img.channel(x, y, c);
                    double w = 1.0 - std::abs(v - 128.0) / 128.0;
                    double delta = sliders[c] / 100.0 * 30.0 * w;
                    out.set_channel(x, y, c,
                                    static_cast<uint8_t>(std::lround(
                                        std::clamp(v + delta, 0.0, 255.0))));
                }

    } else if (std::holds_alternative<CurvesAdjust>(spec)) {
        auto lut = curves_lut(std::get<CurvesAdjust>(spec).curve);
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x)
                for (int c = 0; c < 3; ++c)
                    out.set_channel(x, y, c, lut[img.channel(x, y, c)]);

    } else if (std::holds_alternative<HueSaturationAdjust>(spec)) {
        const auto& hs = std::get<HueSaturationAdjust>(spec);
        if (hs.hue == 0 && hs.saturation == 0 && hs.lightness == 0) return out;
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                auto hsl = detail::rgb_to_hsl(img.get(x, y));
                hsl.h = std::fmod(std::fmod(hsl.h + hs.hue, 360.0) + 360.0, 360.0);
                hsl.s = std::clamp(hsl.s * (1.0 + hs.saturation / 100.0), 0.0, 1.0);
                hsl.l = std::clamp(hsl.l + hs.lightness / 200.0, 0.0, 1.0);
                out.set(x, y, detail::hsl_to_rgb(hsl));
            }

    } else if (std::holds_alternative<LevelsAdjust>(spec)) {
        const auto& lv = std::get<LevelsAdjust>(spec);
        auto lut = levels_lut(lv.input_lo, lv.input_hi, lv.output_lo, lv.output_hi);
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x)
                out.set_channel(x, y, lv.channel, lut[img.channel(x, y, lv.channel)]);
    }

    return out;
}

}  // namespace fsts
