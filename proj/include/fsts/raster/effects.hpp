#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "fsts/image.hpp"
#include "fsts/raster/filters.hpp"
#include "fsts/rng.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Layer effects operating on a RegionShape (rect + glyph coverage).
// Stroke, drop shadow and outer glow need the shape; additive noise works on
// the bare rectangle. Each effect reports its effective geometry: the
// region rectangle expanded by the effect's reach, where reach is
//
//   stroke        size
//   drop shadow   |distance| + size + spread dilation + 1
//   outer glow    spread + 1
//   noise         0
//
// so the pipeline can build exact dilated geometries for masks.

struct StrokeEffect {
    int size = 1;  // 1..5 px
    enum class Position { Inside, Center, Outside } position = Position::Outside;
    enum class Blend { Normal, Multiply } blend = Blend::Normal;
    double opacity = 100.0;  // percent
    Rgb color;
};

struct DropShadowEffect {
    enum class Blend { Normal, Multiply, Darken } blend = Blend::Multiply;
    Rgb color;
    double opacity = 15.0;   // 5..23 percent
    double angle = 0.0;      // -30..30 degrees
    int distance = 3;        // 1..7 px
    double spread = 5.0;     // 3..12 percent
    int size = 5;            // 1..17 px
    double noise = 0.0;      // 1..10 percent
};

struct OuterGlowEffect {
    Rgb color;
    double opacity = 17.0;  // percent
    double noise = 0.0;     // percent
    int spread = 5;         // px
};

struct NoiseEffect {
    double amount = 0.0;  // percent
    bool gaussian = false;
    bool monochromatic = false;
};

using EffectSpec = std::variant<StrokeEffect, DropShadowEffect, OuterGlowEffect, NoiseEffect>;

inline int effect_reach(const EffectSpec& spec) {
    if (std::holds_alternative<StrokeEffect>(spec))
        return std::get<StrokeEffect>(spec).size;
    if (std::holds_alternative<DropShadowEffect>(spec)) {
        const auto& d = std::get<DropShadowEffect>(spec);
        int dilation = static_cast<int>(std::lround(d.size * d.spread / 100.0));
        return std::abs(d.distance) + d.size + dilation + 1;
    }
    if (std::holds_alternative<OuterGlowEffect>(spec))
        return std::get<OuterGlowEffect>(spec).spread + 1;
    return 0;
}

namespace detail {

/// Chebyshev distance (in pixels, up to `limit`) from each cell to the
/// nearest covered / uncovered cell of a binary plane. BFS over the 8-way
/// neighborhood.
inline std::vector<int> chebyshev_distance(const std::vector<char>& inside, int w, int h,
                                           bool to_covered, int limit) {
    std::vector<int> dist(static_cast<size_t>(w) * h, limit + 1);
    std::vector<std::pair<int, int>> frontier;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            bool covered = inside[static_cast<size_t>(y) * w + x] != 0;
            if (covered == to_covered) {
                dist[static_cast<size_t>(y) * w + x] = 0;
                frontier.push_back({x, y});
            }
        }
    int d = 0;
    std::vector<std::pair<int, int>> next;
    while (!frontier.empty() && d < limit) {
        ++d;
        next.clear();
        for (auto [x, y] : frontier)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    auto& cell = dist[static_cast<size_t>(ny) * w + nx];
                    if (cell <= d) continue;
                    cell = d;
                    next.push_back({nx, ny});
                }
        frontier.swap(next);
    }
    return dist;
}

inline uint8_t blend_channel(uint8_t dst, uint8_t src, double alpha, int blend_mode) {
    // 0 normal, 1 multiply, 2 darken
    double s;
    switch (blend_mode) {
        case 1: s = dst * src / 255.0; break;
        case 2: s = std::min<double>(dst, src); break;
        default: s = src; break;
    }
    return static_cast<uint8_t>(
        std::lround(std::clamp(dst + alpha * (s - dst), 0.0, 255.0)));
}

}  // namespace detail

struct EffectResult {
    ImageBuffer image;
    Rect effective;  // union of the shape rect and everything the effect touched
};

/// Applies a layer effect. Modified pixels stay within the shape rect
/// expanded by effect_reach(spec), clipped to the image.
inline EffectResult apply_effect(const ImageBuffer& img, const RegionShape& shape,
                                 const EffectSpec& spec, RngStream& rng) {
    Rect rect = shape.rect.clipped(img.width(), img.height());
    if (rect.empty()) throw Error("apply_effect: empty region");
    bool needs_shape = !std::holds_alternative<NoiseEffect>(spec);
    if (needs_shape && !shape.has_shape())
        throw Error("apply_effect: effect requires a shape mask");

    EffectResult result{img, rect};
    ImageBuffer& out = result.image;

    if (std::holds_alternative<NoiseEffect>(spec)) {
        const auto& n = std::get<NoiseEffect>(spec);
        if (n.amount <= 0.0) return result;
        double mag = n.amount / 100.0 * 255.0;
        for (int y = rect.y; y < rect.bottom(); ++y)
            for (int x = rect.x; x < rect.right(); ++x) {
                if (shape.has_shape() &&
                    shape.coverage_at(x - shape.rect.x, y - shape.rect.y) == 0)
                    continue;
                double delta[3];
                if (n.monochromatic) {
                    double u = n.gaussian ? rng.normal() / 3.0
                                          : rng.uniform_real(-1.0, 1.0);
                    delta[0] = delta[1] = delta[2] = u * mag;
                } else {
                    for (double& d : delta)
                        d = (n.gaussian ? rng.normal() / 3.0
                                        : rng.uniform_real(-1.0, 1.0)) *
                            mag;
                }
                Rgb c = img.get(x, y);
                out.set(x, y,
                        {detail::clamp_byte(c.r + delta[0]),
                         detail::clamp_byte(c.g + delta[1]),
                         detail::clamp_byte(c.b + delta[2])});
            }
        return result;
    }

    // shape-dependent effects work on an expanded window around the rect
    int reach = effect_reach(spec);
    Rect window = rect.dilated(reach).clipped(img.width(), img.height());
    int ww = window.w, wh = window.h;
    std::vector<char> inside(static_cast<size_t>(ww) * wh, 0);
    for (int y = 0; y < wh; ++y)
        for (int x = 0; x < ww; ++x) {
            int gx = window.x + x, gy = window.y + y;
            if (!shape.rect.contains(gx, gy)) continue;
            inside[static_cast<size_t>(y) * ww + x] =
                shape.coverage_at(gx - shape.rect.x, gy - shape.rect.y) >= 128 ? 1 : 0;
        }

    if (std::holds_alternative<StrokeEffect>(spec)) {
        const auto& st = std::get<StrokeEffect>(spec);
        auto d_out = detail::chebyshev_distance(inside, ww, wh, true, st.size + 1);
        auto d_in = detail::chebyshev_distance(inside, ww, wh, false, st.size + 1);
        int blend = st.blend == StrokeEffect::Blend::Multiply ? 1 : 0;
        double alpha = std::clamp(st.opacity / 100.0, 0.0, 1.0);
        for (int y = 0; y < wh; ++y)
            for (int x = 0; x < ww; ++x) {
                size_t i = static_cast<size_t>(y) * ww + x;
                bool in_band;
                switch (st.position) {
                    case StrokeEffect::Position::Outside:
                        in_band = !inside[i] && d_out[i] <= st.size;
                        break;
                    case StrokeEffect::Position::Inside:
                        in_band = inside[i] && d_in[i] <= st.size;
                        break;
                    default: {
                        int half_out = (st.size + 1) / 2, half_in = st.size / 2;
                        in_band = (!inside[i] && d_out[i] <= half_out) ||
                                  (inside[i] && d_in[i] <= half_in);
                        break;
                    }
                }
                if (!in_band) continue;
                int gx = window.x + x, gy = window.y + y;
                Rgb dst = img.get(gx, gy);
                out.set(gx, gy,
                        {detail::blend_channel(dst.r, st.color.r, alpha, blend),
                         detail::blend_channel(dst.g, st.color.g, alpha, blend),
                         detail::blend_channel(dst.b, st.color.b, alpha, blend)});
            }
        result.effective = window;
        return result;
    }

    // drop shadow / outer glow: offset (shadow only), spread hardening via
    // dilation, gaussian softening by the remaining size, blended under the
    // shape where coverage allows
    Rgb color;
    double opacity, noise;
    int dx = 0, dy = 0, size, blend_mode = 0;
    if (std::holds_alternative<DropShadowEffect>(spec)) {
        const auto& ds = std::get<DropShadowEffect>(spec);
        color = ds.color;
        opacity = ds.opacity / 100.0;
        noise = ds.noise / 100.0;
        double rad = ds.angle * 3.14159265358979323846 / 180.0;
        dx = static_cast<int>(std::lround(ds.distance * std::cos(rad)));
        dy = static_cast<int>(std::lround(ds.distance * std::sin(rad)));
        size = ds.size;
        int dilation = static_cast<int>(std::lround(ds.size * ds.spread / 100.0));
        if (dilation > 0) {
            auto d = detail::chebyshev_distance(inside, ww, wh, true, dilation);
            for (size_t i = 0; i < inside.size(); ++i)
                if (d[i] <= dilation) inside[i] = 1;
            size = std::max(1, ds.size - dilation);
        }
        blend_mode = ds.blend == DropShadowEffect::Blend::Multiply
                         ? 1
                         : ds.blend == DropShadowEffect::Blend::Darken ? 2 : 0;
    } else {
        const auto& og = std::get<OuterGlowEffect>(spec);
        color = og.color;
        opacity = og.opacity / 100.0;
        noise = og.noise / 100.0;
        size = std::max(1, og.spread);
        blend_mode = 0;
    }

    // soft mask: offset binary shape blurred with sigma = size / 2
    double sigma = std::max(0.5, size / 2.0);
    auto kernel = detail::gaussian_kernel(sigma);
    int half = static_cast<int>(kernel.size() / 2);
    std::vector<double> tmp(static_cast<size_t>(ww) * wh, 0.0);
    std::vector<double> soft(static_cast<size_t>(ww) * wh, 0.0);
    auto shifted = [&](int x, int y) -> double {
        int sx = x - dx, sy = y - dy;
        if (sx < 0 || sy < 0 || sx >= ww || sy >= wh) return 0.0;
        return inside[static_cast<size_t>(sy) * ww + sx] ? 1.0 : 0.0;
    };
    for (int y = 0; y < wh; ++y)
        for (int x = 0; x < ww; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i)
                acc += kernel[static_cast<size_t>(i + half)] * shifted(x + i, y);
            tmp[static_cast<size_t>(y) * ww + x] = acc;
        }
    for (int y = 0; y < wh; ++y)
        for (int x = 0; x < ww; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                int sy = y + i;
                if (sy < 0 || sy >= wh) continue;
                acc += kernel[static_cast<size_t>(i + half)] *
                       tmp[static_cast<size_t>(sy) * ww + x];
            }
            soft[static_cast<size_t>(y) * ww + x] = acc;
        }

    for (int y = 0; y < wh; ++y)
        for (int x = 0; x < ww; ++x) {
            size_t i = static_cast<size_t>(y) * ww + x;
            double a = soft[i] * opacity;
            if (a <= 1e-4) continue;
            // the effect sits under the layer: full shape coverage blocks it
            int gx = window.x + x, gy = window.y + y;
            double cov = 0.0;
            if (shape.rect.contains(gx, gy))
                cov = shape.coverage_at(gx - shape.rect.x, gy - shape.rect.y) / 255.0;
            a *= 1.0 - cov;
            if (a <= 1e-4) continue;
            if (noise > 0.0) a *= 1.0 - noise * rng.uniform_real(0.0, 1.0);
            Rgb dst = img.get(gx, gy);
            out.set(gx, gy,
                    {detail::blend_channel(dst.r, color.r, a, blend_mode),
                     detail::blend_channel(dst.g, color.g, a, blend_mode),
                     detail::blend_channel(dst.b, color.b, a, blend_mode)});
        }
    result.effective = window;
    return result;
}

}  // namespace fsts
