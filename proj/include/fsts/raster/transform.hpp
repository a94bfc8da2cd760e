#pragma once

#include <cmath>
#include <optional>

#include "fsts/image.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Geometric transforms on extracted patches: scaling (explicit factor or
// adaptive to a target rectangle) and rotation about the patch center with
// bilinear resampling. A patch travels with an optional coverage plane that
// is resampled identically so shape masks survive the transform.

struct Patch {
    ImageBuffer image;
    std::vector<uint8_t> coverage;  // empty = fully opaque

    bool has_coverage() const { return !coverage.empty(); }
    uint8_t coverage_at(int x, int y) const {
        if (coverage.empty()) return 255;
        return coverage[static_cast<size_t>(y) * image.width() + x];
    }
};

/// min-ratio adaptive scale: the largest uniform factor that fits the patch
/// inside the target, preserving aspect ratio.
inline double adaptive_scale(int patch_w, int patch_h, int target_w, int target_h) {
    if (patch_w < 1 || patch_h < 1) throw Error("adaptive_scale: empty patch");
    return std::min(static_cast<double>(target_w) / patch_w,
                    static_cast<double>(target_h) / patch_h);
}

namespace detail {

inline Patch scale_patch(const Patch& in, double scale) {
    int sw = in.image.width(), sh = in.image.height();
    int ow = std::max(1, static_cast<int>(std::lround(sw * scale)));
    int oh = std::max(1, static_cast<int>(std::lround(sh * scale)));
    Patch out;
    out.image = ImageBuffer(ow, oh);
    if (in.has_coverage()) out.coverage.assign(static_cast<size_t>(ow) * oh, 0);

    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            // map output center back into source space
            double sx = (x + 0.5) * sw / ow - 0.5;
            double sy = (y + 0.5) * sh / oh - 0.5;
            int x0 = static_cast<int>(std::floor(sx));
            int y0 = static_cast<int>(std::floor(sy));
            double fx = sx - x0, fy = sy - y0;
            auto cl = [&](int v, int hi) { return std::clamp(v, 0, hi - 1); };
            int xa = cl(x0, sw), xb = cl(x0 + 1, sw);
            int ya = cl(y0, sh), yb = cl(y0 + 1, sh);
            for (int c = 0; c < 3; ++c) {
                double v = (1 - fx) * (1 - fy) * in.image.channel(xa, ya, c) +
                           fx * (1 - fy) * in.image.channel(xb, ya, c) +
                           (1 - fx) * fy * in.image.channel(xa, yb, c) +
                           fx * fy * in.image.channel(xb, yb, c);
                out.image.set_channel(x, y, c,
                                      static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 255.0))));
            }
            if (in.has_coverage()) {
                double v = (1 - fx) * (1 - fy) * in.coverage_at(xa, ya) +
                           fx * (1 - fy) * in.coverage_at(xb, ya) +
                           (1 - fx) * fy * in.coverage_at(xa, yb) +
                           fx * fy * in.coverage_at(xb, yb);
                out.coverage[static_cast<size_t>(y) * ow + x] =
                    static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    return out;
}

inline Patch rotate_patch(const Patch& in, double degrees) {
    int sw = in.image.width(), sh = in.image.height();
    double rad = degrees * 3.14159265358979323846 / 180.0;
    double c = std::cos(rad), s = std::sin(rad);
    // output bounds grow to contain the rotated patch
    double hw = sw / 2.0, hh = sh / 2.0;
    double ow2 = std::abs(hw * c) + std::abs(hh * s);
    double oh2 = std::abs(hw * s) + std::abs(hh * c);
    int ow = std::max(1, static_cast<int>(std::ceil(2 * ow2)));
    int oh = std::max(1, static_cast<int>(std::ceil(2 * oh2)));

    Patch out;
    out.image = ImageBuffer(ow, oh);
    out.coverage.assign(static_cast<size_t>(ow) * oh, 0);  // corners become transparent

    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            // inverse-rotate the output center into source space
            double dx = x + 0.5 - ow / 2.0;
            double dy = y + 0.5 - oh / 2.0;
            double sx = c * dx + s * dy + sw / 2.0 - 0.5;
            double sy = -s * dx + c * dy + sh / 2.0 - 0.5;
            int x0 = static_cast<int>(std::floor(sx));
            int y0 = static_cast<int>(std::floor(sy));
            if (x0 < -1 || y0 < -1 || x0 > sw - 1 || y0 > sh - 1) continue;
            double fx = sx - x0, fy = sy - y0;
            auto inside = [&](int px, int py) { return px >= 0 && py >= 0 && px < sw && py < sh; };
            double wsum = 0.0, acc[3] = {0, 0, 0}, cov = 0.0;
            const int xs[2] = {x0, x0 + 1};
            const int ys[2] = {y0, y0 + 1};
            const double wx[2] = {1 - fx, fx};
            const double wy[2] = {1 - fy, fy};
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 2; ++i) {
                    if (!inside(xs[i], ys[j])) continue;
                    double w = wx[i] * wy[j];
                    wsum += w;
                    for (int ch = 0; ch < 3; ++ch)
                        acc[ch] += w * in.image.channel(xs[i], ys[j], ch);
                    cov += w * in.coverage_at(xs[i], ys[j]);
                }
            if (wsum <= 0.0) continue;
            for (int ch = 0; ch < 3; ++ch)
                out.image.set_channel(
                    x, y, ch,
                    static_cast<uint8_t>(std::lround(std::clamp(acc[ch] / wsum, 0.0, 255.0))));
            // coverage is weighted by border falloff so rotated corners blend
            out.coverage[static_cast<size_t>(y) * ow + x] =
                static_cast<uint8_t>(std::lround(std::clamp(cov, 0.0, 255.0)));
        }
    return out;
}

}  // namespace detail

struct TransformSpec {
    std::optional<double> scale;                 // explicit factor
    std::optional<std::pair<int, int>> adapt_to; // target (w, h) for adaptive scale
    double rotation_deg = 0.0;
};

/// Applies scaling then rotation. Identity inputs (scale 1, rotation 0)
/// return the patch bit-identical.
inline Patch transform_region(const Patch& patch, const TransformSpec& spec) {
    if (patch.image.width() < 1 || patch.image.height() < 1)
        throw Error("transform_region: empty patch");
    double scale = 1.0;
    if (spec.adapt_to)
        scale = adaptive_scale(patch.image.width(), patch.image.height(),
                               spec.adapt_to->first, spec.adapt_to->second);
    else if (spec.scale)
        scale = *spec.scale;
    if (scale <= 0.0) throw Error("transform_region: scale must be positive");

    Patch out = patch;
    if (scale != 1.0) out = detail::scale_patch(out, scale);
    if (spec.rotation_deg != 0.0) out = detail::rotate_patch(out, spec.rotation_deg);
    return out;
}

/// Source-over paste of a patch at (x, y), clipped to the destination.
/// Coverage values blend linearly; without coverage the patch replaces the
/// destination rectangle wholesale. Returns the clipped destination rect.
inline Rect composite_paste(ImageBuffer& dst, const Patch& patch, int x, int y) {
    Rect placed = {x, y, patch.image.width(), patch.image.height()};
    Rect clipped = placed.clipped(dst.width(), dst.height());
    if (clipped.empty()) throw Error("composite_paste: placement fully out of bounds");
    for (int py = clipped.y; py < clipped.bottom(); ++py)
        for (int px = clipped.x; px < clipped.right(); ++px) {
            int lx = px - placed.x, ly = py - placed.y;
            uint8_t cov = patch.coverage_at(lx, ly);
            if (cov == 0) continue;
            Rgb src = patch.image.get(lx, ly);
            if (cov == 255) {
                dst.set(px, py, src);
                continue;
            }
            Rgb d = dst.get(px, py);
            auto mix = [&](uint8_t a, uint8_t b) {
                return static_cast<uint8_t>((a * cov + b * (255 - cov) + 127) / 255);
            };
            dst.set(px, py, {mix(src.r, d.r), mix(src.g, d.g), mix(src.b, d.b)});
        }
    return clipped;
}

}  // namespace fsts
