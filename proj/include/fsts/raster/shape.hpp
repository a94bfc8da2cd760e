#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <variant>
#include <vector>

#include "fsts/image.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Text-shape extraction: builds a coverage mask selecting glyph pixels
// inside a region, either by background-tolerance thresholding (magic wand)
// or by linear channel remapping (levels).

struct MagicWandExtract {
    int tolerance = 20;       // 1..50, max-channel distance from background
    bool contiguous = true;   // flood from the region border vs global threshold
    bool anti_alias = false;  // feather the boundary one pixel
};

struct LevelsExtract {
    int channel = 0;  // 0=red, 1=green, 2=blue
    int input_lo = 0;
    int input_hi = 255;
};

using ShapeExtractSpec = std::variant<MagicWandExtract, LevelsExtract>;

namespace detail {

/// Background estimate: per-channel median of the region's border ring.
inline Rgb region_background(const ImageBuffer& img, const Rect& r) {
    std::vector<uint8_t> ch[3];
    auto push = [&](Rgb c) {
        ch[0].push_back(c.r);
        ch[1].push_back(c.g);
        ch[2].push_back(c.b);
    };
    for (int x = r.x; x < r.right(); ++x) {
        push(img.get(x, r.y));
        if (r.h > 1) push(img.get(x, r.bottom() - 1));
    }
    for (int y = r.y + 1; y < r.bottom() - 1; ++y) {
        push(img.get(r.x, y));
        if (r.w > 1) push(img.get(r.right() - 1, y));
    }
    Rgb bg;
    uint8_t* out[3] = {&bg.r, &bg.g, &bg.b};
    for (int c = 0; c < 3; ++c) {
        auto& v = ch[c];
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        *out[c] = v[v.size() / 2];
    }
    return bg;
}

inline int max_channel_distance(Rgb a, Rgb b) {
    int dr = std::abs(int(a.r) - int(b.r));
    int dg = std::abs(int(a.g) - int(b.g));
    int db = std::abs(int(a.b) - int(b.b));
    return std::max(dr, std::max(dg, db));
}

}  // namespace detail

/// Extracts the text shape within `region`. The returned RegionShape carries
/// a coverage plane over the same rectangle; 255 marks glyph pixels.
///
/// magic wand: pixels whose max-channel distance from the estimated
/// background exceeds the tolerance are foreground. With contiguous=true the
/// background is grown by 4-way flood from the region border and everything
/// unreached is foreground; contiguous=false thresholds every pixel
/// directly. anti_alias=true feathers boundary foreground pixels to half
/// coverage.
///
/// levels: the named channel is remapped linearly from [input_lo, input_hi]
/// to [0,255] with clamping; foreground = remapped value < 128 (text darker
/// than background after the stretch).
inline RegionShape extract_text_shape(const ImageBuffer& img, const Rect& region,
                                      const ShapeExtractSpec& spec) {
    Rect r = region.clipped(img.width(), img.height());
    if (r.empty()) throw Error("extract_text_shape: degenerate region");

    RegionShape shape;
    shape.rect = r;
    shape.coverage.assign(static_cast<size_t>(r.w) * r.h, 0);

    auto idx = [&](int x, int y) { return static_cast<size_t>(y) * r.w + x; };

    if (std::holds_alternative<MagicWandExtract>(spec)) {
        const auto& mw = std::get<MagicWandExtract>(spec);
        if (mw.tolerance < 1 || mw.tolerance > 50)
            throw Error("extract_text_shape: tolerance outside [1,50]");
        Rgb bg = detail::region_background(img, r);

        auto is_bg = [&](int lx, int ly) {
            return detail::max_channel_distance(img.get(r.x + lx, r.y + ly), bg) <=
                   mw.tolerance;
        };

        if (!mw.contiguous) {
            for (int y = 0; y < r.h; ++y)
                for (int x = 0; x < r.w; ++x)
                    if (!is_bg(x, y)) shape.coverage[idx(x, y)] = 255;
        } else {
            // flood background from the border; unreached pixels are glyph
            std::vector<char> bgmask(shape.coverage.size(), 0);
            std::vector<std::pair<int, int>> stack;
            auto seed = [&](int x, int y) {
                if (!bgmask[idx(x, y)] && is_bg(x, y)) {
                    bgmask[idx(x, y)] = 1;
                    stack.push_back({x, y});
                }
            };
            for (int x = 0; x < r.w; ++x) {
                seed(x, 0);
                seed(x, r.h - 1);
            }
            for (int y = 0; y < r.h; ++y) {
                seed(0, y);
                seed(r.w - 1, y);
            }
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                const int dx[4] = {1, -1, 0, 0};
                const int dy[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int nx = cx + dx[k], ny = cy + dy[k];
                    if (nx < 0 || ny < 0 || nx >= r.w || ny >= r.h) continue;
                    seed(nx, ny);
                }
            }
            for (size_t i = 0; i < bgmask.size(); ++i)
                if (!bgmask[i]) shape.coverage[i] = 255;
        }

        if (mw.anti_alias) {
            // one-pixel feather: boundary foreground drops to half coverage
            auto full = shape.coverage;
            for (int y = 0; y < r.h; ++y)
                for (int x = 0; x < r.w; ++x) {
                    if (full[idx(x, y)] != 255) continue;
                    bool edge = false;
                    for (int dy = -1; dy <= 1 && !edge; ++dy)
                        for (int dx = -1; dx <= 1 && !edge; ++dx) {
                            int nx = x + dx, ny = y + dy;
                            if (nx < 0 || ny < 0 || nx >= r.w || ny >= r.h)
                                continue;
                            edge = full[idx(nx, ny)] == 0;
                        }
                    if (edge) shape.coverage[idx(x, y)] = 128;
                }
        }
    } else {
        const auto& lv = std::get<LevelsExtract>(spec);
        if (lv.input_lo < 0 || lv.input_hi > 255 || lv.input_lo >= lv.input_hi)
            throw Error("extract_text_shape: bad input levels");
        for (int y = 0; y < r.h; ++y)
            for (int x = 0; x < r.w; ++x) {
                int v = img.channel(r.x + x, r.y + y, lv.channel);
                double remapped = 255.0 * (v - lv.input_lo) / (lv.input_hi - lv.input_lo);
                int q = static_cast<int>(std::lround(std::clamp(remapped, 0.0, 255.0)));
                if (q < 128) shape.coverage[idx(x, y)] = 255;
            }
    }
    return shape;
}

}  // namespace fsts
