#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "fsts/image.hpp"
#include "fsts/rng.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Content removal inside a rectangle. All variants confine their edits to
// the region; clone-style variants read source pixels from a surrounding
// ring and fail when the region touches all four image borders (no ring
// left to sample).

struct ContentAwareRemoval {
    int iterations = 3;  // 1..5
};
struct SolidFillRemoval {
    Rgb color;
};
struct BackgroundCloneRemoval {};
struct CloneStampRemoval {
    double opacity = 100.0;  // percent
    double flow = 100.0;     // percent
};
struct HealingBrushRemoval {
    bool replace_mode = false;  // "replace" skips the tone match
};

using RemovalSpec = std::variant<ContentAwareRemoval, SolidFillRemoval,
                                 BackgroundCloneRemoval, CloneStampRemoval,
                                 HealingBrushRemoval>;

namespace detail {

inline void require_source_ring(const ImageBuffer& img, const Rect& r) {
    if (r.x <= 0 && r.y <= 0 && r.right() >= img.width() && r.bottom() >= img.height())
        throw Error("removal: region covers the image, no source ring available");
}

/// Candidate same-size source rects on a ring around the region, clipped to
/// rects fully inside the image and outside the region.
inline std::vector<Rect> ring_candidates(const ImageBuffer& img, const Rect& r) {
    std::vector<Rect> out;
    const int gaps[3] = {2, r.h / 2 + 2, r.h + 2};
    for (int gap : gaps) {
        const Rect candidates[8] = {
            {r.x - r.w - gap, r.y, r.w, r.h},          // left
            {r.right() + gap, r.y, r.w, r.h},          // right
            {r.x, r.y - r.h - gap, r.w, r.h},          // above
            {r.x, r.bottom() + gap, r.w, r.h},         // below
            {r.x - r.w - gap, r.y - r.h - gap, r.w, r.h},
            {r.right() + gap, r.y - r.h - gap, r.w, r.h},
            {r.x - r.w - gap, r.bottom() + gap, r.w, r.h},
            {r.right() + gap, r.bottom() + gap, r.w, r.h},
        };
        for (const Rect& c : candidates) {
            if (c.x < 0 || c.y < 0 || c.right() > img.width() || c.bottom() > img.height())
                continue;
            if (c.intersects(r)) continue;
            out.push_back(c);
        }
    }
    return out;
}

inline double rect_variance(const ImageBuffer& img, const Rect& r) {
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (int y = r.y; y < r.bottom(); ++y)
        for (int x = r.x; x < r.right(); ++x) {
            Rgb c = img.get(x, y);
            double luma = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
            sum += luma;
            sum2 += luma * luma;
            ++n;
        }
    double mean = sum / n;
    return sum2 / n - mean * mean;
}

inline void copy_rect(ImageBuffer& dst, const Rect& to, const ImageBuffer& src,
                      const Rect& from, double alpha) {
    for (int y = 0; y < to.h; ++y)
        for (int x = 0; x < to.w; ++x) {
            Rgb s = src.get(from.x + x, from.y + y);
            if (alpha >= 1.0) {
                dst.set(to.x + x, to.y + y, s);
            } else {
                Rgb d = dst.get(to.x + x, to.y + y);
                auto mix = [&](uint8_t a, uint8_t b) {
                    return static_cast<uint8_t>(std::lround(b + alpha * (a - b)));
                };
                dst.set(to.x + x, to.y + y, {mix(s.r, d.r), mix(s.g, d.g), mix(s.b, d.b)});
            }
        }
}

/// Mean color of the one-pixel ring around a rect (clamped sampling).
inline std::array<double, 3> ring_mean(const ImageBuffer& img, const Rect& r) {
    double acc[3] = {0, 0, 0};
    int n = 0;
    for (int x = r.x - 1; x <= r.right(); ++x) {
        for (int yy : {r.y - 1, r.bottom()}) {
            Rgb c = img.get_clamped(x, yy);
            acc[0] += c.r;
            acc[1] += c.g;
            acc[2] += c.b;
            ++n;
        }
    }
    for (int y = r.y; y < r.bottom(); ++y) {
        for (int xx : {r.x - 1, r.right()}) {
            Rgb c = img.get_clamped(xx, y);
            acc[0] += c.r;
            acc[1] += c.g;
            acc[2] += c.b;
            ++n;
        }
    }
    return {acc[0] / n, acc[1] / n, acc[2] / n};
}

/// Exemplar-based fill: initialize by onion-peel averaging from the region
/// border inward, then refine each pixel from the best of K sampled 7x7
/// exemplar patches centered outside the region.
inline void content_aware_fill(ImageBuffer& img, const Rect& region, int iterations,
                               RngStream& rng) {
    const int P = 3;  // patch half-size (7x7)
    require_source_ring(img, region);

    // onion-peel initialization: repeatedly average already-known neighbors
    std::vector<char> known(static_cast<size_t>(region.w) * region.h, 0);
    auto kidx = [&](int x, int y) { return static_cast<size_t>(y) * region.w + x; };
    size_t remaining = known.size();
    while (remaining > 0) {
        bool progress = false;
        for (int y = 0; y < region.h; ++y)
            for (int x = 0; x < region.w; ++x) {
                if (known[kidx(x, y)]) continue;
                double acc[3] = {0, 0, 0};
                int n = 0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = x + dx, ny = y + dy;
                        int gx = region.x + nx, gy = region.y + ny;
                        bool neighbor_known;
                        if (nx < 0 || ny < 0 || nx >= region.w || ny >= region.h)
                            neighbor_known = gx >= 0 && gy >= 0 && gx < img.width() &&
                                             gy < img.height();
                        else
                            neighbor_known = known[kidx(nx, ny)] != 0;
                        if (!neighbor_known) continue;
                        Rgb c = img.get_clamped(gx, gy);
                        acc[0] += c.r;
                        acc[1] += c.g;
                        acc[2] += c.b;
                        ++n;
                    }
                if (n == 0) continue;
                img.set(region.x + x, region.y + y,
                        {static_cast<uint8_t>(std::lround(acc[0] / n)),
                         static_cast<uint8_t>(std::lround(acc[1] / n)),
                         static_cast<uint8_t>(std::lround(acc[2] / n))});
                known[kidx(x, y)] = 2;  // known after this sweep
                progress = true;
            }
        if (!progress) break;
        remaining = 0;
        for (char& k : known) {
            if (k == 2) k = 1;
            if (!k) ++remaining;
        }
    }

    // exemplar centers live in a band around the region
    Rect band = region.dilated(std::max({region.w, region.h, 16}))
                    .clipped(img.width(), img.height());
    const int K = 48;
    auto sample_center = [&]() -> std::pair<int, int> {
        for (int tries = 0; tries < 64; ++tries) {
            int cx = static_cast<int>(rng.uniform_int(band.x + P, band.right() - 1 - P));
            int cy = static_cast<int>(rng.uniform_int(band.y + P, band.bottom() - 1 - P));
            Rect patch = {cx - P, cy - P, 2 * P + 1, 2 * P + 1};
            if (patch.intersects(region)) continue;
            if (patch.x < 0 || patch.y < 0 || patch.right() > img.width() ||
                patch.bottom() > img.height())
                continue;
            return {cx, cy};
        }
        return {-1, -1};
    };

    for (int iter = 0; iter < iterations; ++iter) {
        // a fresh candidate set each iteration
        std::vector<std::pair<int, int>> centers;
        for (int k = 0; k < K; ++k) {
            auto c = sample_center();
            if (c.first >= 0) centers.push_back(c);
        }
        if (centers.empty()) break;
        ImageBuffer snapshot = img;
        for (int y = 0; y < region.h; ++y)
            for (int x = 0; x < region.w; ++x) {
                int gx = region.x + x, gy = region.y + y;
                long long best = -1;
                Rgb best_color = snapshot.get(gx, gy);
                for (auto [cx, cy] : centers) {
                    long long ssd = 0;
                    for (int dy = -P; dy <= P; ++dy)
                        for (int dx = -P; dx <= P; ++dx) {
                            Rgb a = snapshot.get_clamped(gx + dx, gy + dy);
                            Rgb b = snapshot.get(cx + dx, cy + dy);
                            int dr = a.r - b.r, dg = a.g - b.g, db = a.b - b.b;
                            ssd += dr * dr + dg * dg + db * db;
                        }
                    if (best < 0 || ssd < best) {
                        best = ssd;
                        best_color = snapshot.get(cx, cy);
                    }
                }
                img.set(gx, gy, best_color);
            }
    }
}

}  // namespace detail

/// Removes region content per `spec`. Returns the modified image; edits are
/// confined to the region rectangle.
inline ImageBuffer apply_removal(const ImageBuffer& img, const Rect& region_in,
                                 const RemovalSpec& spec, RngStream& rng) {
    Rect region = region_in.clipped(img.width(), img.height());
    if (region.empty()) throw Error("apply_removal: empty region");
    ImageBuffer out = img;

    if (std::holds_alternative<SolidFillRemoval>(spec)) {
        out.fill_rect(region, std::get<SolidFillRemoval>(spec).color);

    } else if (std::holds_alternative<ContentAwareRemoval>(spec)) {
        int iters = std::clamp(std::get<ContentAwareRemoval>(spec).iterations, 1, 5);
        detail::content_aware_fill(out, region, iters, rng);

    } else if (std::holds_alternative<BackgroundCloneRemoval>(spec)) {
        detail::require_source_ring(img, region);
        auto candidates = detail::ring_candidates(img, region);
        if (candidates.empty())
            throw Error("removal: no in-bounds background candidate for region");
        const Rect* best = &candidates.front();
        double best_var = detail::rect_variance(img, *best);
        for (const auto& c : candidates) {
            double v = detail::rect_variance(img, c);
            if (v < best_var) {
                best_var = v;
                best = &c;
            }
        }
        detail::copy_rect(out, region, img, *best, 1.0);

    } else if (std::holds_alternative<CloneStampRemoval>(spec)) {
        const auto& cs = std::get<CloneStampRemoval>(spec);
        detail::require_source_ring(img, region);
        auto candidates = detail::ring_candidates(img, region);
        if (candidates.empty())
            throw Error("removal: no in-bounds clone source for region");
        const Rect& src = candidates[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(candidates.size()) - 1))];
        double alpha = std::clamp(cs.opacity / 100.0, 0.0, 1.0) *
                       std::clamp(cs.flow / 100.0, 0.0, 1.0);
        detail::copy_rect(out, region, img, src, alpha);

    } else if (std::holds_alternative<HealingBrushRemoval>(spec)) {
        const auto& hb = std::get<HealingBrushRemoval>(spec);
        detail::require_source_ring(img, region);
        auto candidates = detail::ring_candidates(img, region);
        if (candidates.empty())
            throw Error("removal: no in-bounds healing source for region");
        const Rect& src = candidates[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(candidates.size()) - 1))];
        detail::copy_rect(out, region, img, src, 1.0);
        if (!hb.replace_mode) {
            // match the copied patch's tone to the destination surroundings
            auto dst_mean = detail::ring_mean(img, region);
            auto src_mean = detail::ring_mean(img, src);
            double shift[3] = {dst_mean[0] - src_mean[0], dst_mean[1] - src_mean[1],
                               dst_mean[2] - src_mean[2]};
            for (int y = region.y; y < region.bottom(); ++y)
                for (int x = region.x; x < region.right(); ++x) {
                    Rgb c = out.get(x, y);
                    out.set(x, y,
                            {static_cast<uint8_t>(std::lround(
                                 std::clamp(c.r + shift[0], 0.0, 255.0))),
                             static_cast<uint8_t>(std::lround(
                                 std::clamp(c.g + shift[1], 0.0, 255.0))),
                             static_cast<uint8_t>(std::lround(
                                 std::clamp(c.b + shift[2], 0.0, 255.0)))});
                }
        }
    }

    return out;
}

}  // namespace fsts
