#pragma once

#include <array>
#include <cmath>
#include <variant>
#include <vector>

#include "fsts/image.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Region-confined filters. Every filter reads from the full image with
// clamp-to-edge sampling (so region borders see real surroundings, not a
// seam) and writes only inside its region. Kernels:
//
//   gaussian     separable, sigma = radius / 2, truncated at 3 sigma
//   motion       line kernel: `distance` samples along `angle`
//   sharpen      unsharp mask, out = in + amount * (in - gaussian(in)),
//                gated where max-channel |in - blur| exceeds the threshold
//   blur         fixed 3x3 kernel [1 2 1; 2 4 2; 1 2 1] / 16
//   blur-more    gaussian radius 2 (sigma 1)
//   mean         3x3 box
//   convolution  5x5 integer kernel, out = sum/scale + offset, clamped
//   smart        bilateral, spatial sigma = radius / 2, range weight by mode
//   surface      bilateral with box support and linear range falloff
//   radial       spin/zoom: average over small rotations/scalings about the
//                region center; quality picks the sample count
//   lens         polygonal-bokeh average, aperture radius 0..1 mapped to
//                0..8 px; highlight boost above threshold; hash noise

struct GaussianFilter {
    double radius = 1.0;  // pixels
};
struct MotionFilter {
    double angle = 0.0;  // degrees
    int distance = 1;    // pixels
};
struct SharpenFilter {
    double amount = 100.0;    // percent
    double radius = 1.0;      // pixels
    double threshold = 0.0;   // levels
    int iterations = 1;
};
struct BlurFilter {};
struct BlurMoreFilter {};
struct MeanFilter {};
struct ConvolutionFilter {
    std::array<int, 25> kernel = {};
    int scale = 1;
    int offset = 0;
};
struct SmartBlurFilter {
    double radius = 3.0;
    double threshold = 5.0;
    enum class Quality { High, Medium, Low } quality = Quality::High;
    enum class Mode { EdgePreservation, Normal, StrokeEnhancement } mode = Mode::Normal;
};
struct SurfaceBlurFilter {
    int radius = 5;
    double threshold = 15.0;
};
struct RadialBlurFilter {
    enum class Method { Spin, Zoom } method = Method::Spin;
    enum class Quality { Best, Good, Draft } quality = Quality::Good;
};
struct LensBlurFilter {
    int aperture_sides = 6;       // 3..8
    double aperture_radius = 0.5; // 0..1, mapped to 0..8 px
    double blade_curvature = 0.0; // 0..1, polygon -> disc
    double rotation = 0.0;        // degrees
    double brightness = 100.0;    // percent, highlight boost
    double threshold = 100.0;     // percent, highlight cutoff
    double noise_amount = 0.0;    // percent
    bool noise_gaussian = false;
};

using FilterSpec =
    std::variant<GaussianFilter, MotionFilter, SharpenFilter, BlurFilter, BlurMoreFilter,
                 MeanFilter, ConvolutionFilter, SmartBlurFilter, SurfaceBlurFilter,
                 RadialBlurFilter, LensBlurFilter>;

namespace detail {

inline uint8_t clamp_byte(double v) {
    return static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

inline std::vector<double> gaussian_kernel(double sigma) {
    int half = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> k(static_cast<size_t>(2 * half + 1));
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
        double w = std::exp(-0.5 * (i / sigma) * (i / sigma));
        k[static_cast<size_t>(i + half)] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

/// Separable gaussian over `region`, reading clamped from `src`. Returns a
/// region-sized float plane per channel.
inline std::vector<std::array<double, 3>> gaussian_region(const ImageBuffer& src,
                                                          const Rect& region, double sigma) {
    auto k = gaussian_kernel(sigma);
    int half = static_cast<int>(k.size() / 2);
    int bw = region.w, bh = region.h + 2 * half;
    // horizontal pass over a vertically extended band
    std::vector<std::array<double, 3>> band(static_cast<size_t>(bw) * bh);
    for (int y = 0; y < bh; ++y)
        for (int x = 0; x < bw; ++x) {
            double acc[3] = {0, 0, 0};
            for (int i = -half; i <= half; ++i) {
                Rgb c = src.get_clamped(region.x + x + i, region.y + y - half);
                double w = k[static_cast<size_t>(i + half)];
                acc[0] += w * c.r;
                acc[1] += w * c.g;
                acc[2] += w * c.b;
            }
            band[static_cast<size_t>(y) * bw + x] = {acc[0], acc[1], acc[2]};
        }
    // vertical pass into the region
    std::vector<std::array<double, 3>> out(static_cast<size_t>(region.w) * region.h);
    for (int y = 0; y < region.h; ++y)
        for (int x = 0; x < region.w; ++x) {
            double acc[3] = {0, 0, 0};
            for (int i = -half; i <= half; ++i) {
                const auto& c = band[static_cast<size_t>(y + half + i) * bw + x];
                double w = k[static_cast<size_t>(i + half)];
                acc[0] += w * c[0];
                acc[1] += w * c[1];
                acc[2] += w * c[2];
            }
            out[static_cast<size_t>(y) * region.w + x] = {acc[0], acc[1], acc[2]};
        }
    return out;
}

/// 64-bit pixel hash for stateless per-pixel noise (lens blur grain).
inline uint64_t pixel_hash(int x, int y, uint64_t salt) {
    uint64_t h = salt ^ (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32 |
                         static_cast<uint32_t>(y));
    h ^= h >> 33;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 33;
    h *= 0xC4CEB9FE1A85EC53ull;
    h ^= h >> 33;
    return h;
}

}  // namespace detail

/// Applies `spec` to `region`; pixels outside the region are bit-identical
/// to the input.
inline ImageBuffer apply_filter(const ImageBuffer& img, const Rect& region_in,
                                const FilterSpec& spec) {
    Rect region = region_in.clipped(img.width(), img.height());
    if (region.empty()) throw Error("apply_filter: zero-area region");
    ImageBuffer out = img;

    auto write_plane = [&](const std::vector<std::array<double, 3>>& plane) {
        for (int y = 0; y < region.h; ++y)
            for (int x = 0; x < region.w; ++x) {
                const auto& v = plane[static_cast<size_t>(y) * region.w + x];
                out.set(region.x + x, region.y + y,
                        {detail::clamp_byte(v[0]), detail::clamp_byte(v[1]),
                         detail::clamp_byte(v[2])});
            }
    };

    if (std::holds_alternative<GaussianFilter>(spec)) {
        double radius = std::get<GaussianFilter>(spec).radius;
        if (radius <= 0.0) return out;
        write_plane(detail::gaussian_region(img, region, radius / 2.0));

    } else if (std::holds_alternative<BlurMoreFilter>(spec)) {
        write_plane(detail::gaussian_region(img, region, 1.0));

    } else if (std::holds_alternative<BlurFilter>(spec) ||
               std::holds_alternative<MeanFilter>(spec)) {
        bool mean = std::holds_alternative<MeanFilter>(spec);
        double k[9];
        if (mean)
            for (double& w : k) w = 1.0 / 9.0;
        else {
            const double weighted[9] = {1, 2, 1, 2, 4, 2, 1, 2, 1};
            for (int i = 0; i < 9; ++i) k[i] = weighted[i] / 16.0;
        }
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                double acc[3] = {0, 0, 0};
                int i = 0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx, ++i) {
                        Rgb c = img.get_clamped(x + dx, y + dy);
                        acc[0] += k[i] * c.r;
                        acc[1] += k[i] * c.g;
                        acc[2] += k[i] * c.b;
                    }
                out.set(x, y, {detail::clamp_byte(acc[0]), detail::clamp_byte(acc[1]),
                               detail::clamp_byte(acc[2])});
            }

    } else if (std::holds_alternative<MotionFilter>(spec)) {
        const auto& m = std::get<MotionFilter>(spec);
        int n = std::max(1, m.distance);
        double rad = m.angle * 3.14159265358979323846 / 180.0;
        double cx = std::cos(rad), cy = std::sin(rad);
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                double acc[3] = {0, 0, 0};
                for (int i = 0; i < n; ++i) {
                    double t = i - (n - 1) / 2.0;
                    int sx = x + static_cast<int>(std::lround(t * cx));
                    int sy = y + static_cast<int>(std::lround(t * cy));
                    Rgb c = img.get_clamped(sx, sy);
                    acc[0] += c.r;
                    acc[1] += c.g;
                    acc[2] += c.b;
                }
                out.set(x, y,
                        {detail::clamp_byte(acc[0] / n), detail::clamp_byte(acc[1] / n),
                         detail::clamp_byte(acc[2] / n)});
            }

    } else if (std::holds_alternative<SharpenFilter>(spec)) {
        const auto& s = std::get<SharpenFilter>(spec);
        ImageBuffer work = img;
        for (int iter = 0; iter < std::max(1, s.iterations); ++iter) {
            auto blur = detail::gaussian_region(work, region, std::max(0.1, s.radius) / 2.0);
            ImageBuffer next = work;
            for (int y = 0; y < region.h; ++y)
                for (int x = 0; x < region.w; ++x) {
                    Rgb c = work.get(region.x + x, region.y + y);
                    const auto& b = blur[static_cast<size_t>(y) * region.w + x];
                    double d[3] = {c.r - b[0], c.g - b[1], c.b - b[2]};
                    double mag = std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])});
                    if (mag <= s.threshold) continue;
                    next.set(region.x + x, region.y + y,
                             {detail::clamp_byte(c.r + s.amount / 100.0 * d[0]),
                              detail::clamp_byte(c.g + s.amount / 100.0 * d[1]),
                              detail::clamp_byte(c.b + s.amount / 100.0 * d[2])});
                }
            work = next;
        }
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) out.set(x, y, work.get(x, y));

    } else if (std::holds_alternative<ConvolutionFilter>(spec)) {
        const auto& cf = std::get<ConvolutionFilter>(spec);
        if (cf.scale == 0) throw Error("apply_filter: convolution scale is zero");
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x)
                for (int c = 0; c < 3; ++c) {
                    // integer arithmetic end to end, so the identity kernel
                    // is bit-exact
                    long long acc = 0;
                    int i = 0;
                    for (int dy = -2; dy <= 2; ++dy)
                        for (int dx = -2; dx <= 2; ++dx, ++i) {
                            int xx = std::clamp(x + dx, 0, img.width() - 1);
                            int yy = std::clamp(y + dy, 0, img.height() - 1);
                            acc += static_cast<long long>(cf.kernel[static_cast<size_t>(i)]) *
                                   img.channel(xx, yy, c);
                        }
                    long long v = acc / cf.scale + cf.offset;
                    out.set_channel(x, y, c,
                                    static_cast<uint8_t>(std::clamp<long long>(v, 0, 255)));
                }

    } else if (std::holds_alternative<SmartBlurFilter>(spec)) {
        const auto& sb = std::get<SmartBlurFilter>(spec);
        double sigma = std::max(0.05, sb.radius / 2.0);
        double trunc = sb.quality == SmartBlurFilter::Quality::High
                           ? 3.0
                           : sb.quality == SmartBlurFilter::Quality::Medium ? 2.0 : 1.5;
        int half = std::max(1, static_cast<int>(std::ceil(trunc * sigma)));
        double range_sigma = std::max(0.5, sb.threshold);
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                Rgb center = img.get(x, y);
                double acc[3] = {0, 0, 0}, wsum = 0.0;
                for (int dy = -half; dy <= half; ++dy)
                    for (int dx = -half; dx <= half; ++dx) {
                        Rgb c = img.get_clamped(x + dx, y + dy);
                        double spatial =
                            std::exp(-0.5 * (dx * dx + dy * dy) / (sigma * sigma));
                        double diff = std::max({std::abs(c.r - center.r),
                                                std::abs(c.g - center.g),
                                                std::abs(c.b - center.b)});
                        double range;
                        if (sb.mode == SmartBlurFilter::Mode::EdgePreservation)
                            range = diff <= range_sigma ? 1.0 : 0.0;
                        else
                            range = std::exp(-0.5 * (diff / range_sigma) * (diff / range_sigma));
                        double w = spatial * range;
                        acc[0] += w * c.r;
                        acc[1] += w * c.g;
                        acc[2] += w * c.b;
                        wsum += w;
                    }
                if (wsum <= 0.0) continue;
                Rgb v = {detail::clamp_byte(acc[0] / wsum), detail::clamp_byte(acc[1] / wsum),
                         detail::clamp_byte(acc[2] / wsum)};
                if (sb.mode == SmartBlurFilter::Mode::StrokeEnhancement) {
                    // light unsharp pass to emphasize strokes
                    double d[3] = {center.r - acc[0] / wsum, center.g - acc[1] / wsum,
                                   center.b - acc[2] / wsum};
                    v = {detail::clamp_byte(v.r + 0.5 * d[0]),
                         detail::clamp_byte(v.g + 0.5 * d[1]),
                         detail::clamp_byte(v.b + 0.5 * d[2])};
                }
                out.set(x, y, v);
            }

    } else if (std::holds_alternative<SurfaceBlurFilter>(spec)) {
        const auto& sf = std::get<SurfaceBlurFilter>(spec);
        int half = std::max(1, sf.radius);
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                Rgb center = img.get(x, y);
                double acc[3] = {0, 0, 0}, wsum = 0.0;
                for (int dy = -half; dy <= half; ++dy)
                    for (int dx = -half; dx <= half; ++dx) {
                        Rgb c = img.get_clamped(x + dx, y + dy);
                        double diff = std::max({std::abs(c.r - center.r),
                                                std::abs(c.g - center.g),
                                                std::abs(c.b - center.b)});
                        double w = std::max(0.0, 1.0 - diff / (2.0 * sf.threshold));
                        acc[0] += w * c.r;
                        acc[1] += w * c.g;
                        acc[2] += w * c.b;
                        wsum += w;
                    }
                if (wsum <= 0.0) continue;
                out.set(x, y,
                        {detail::clamp_byte(acc[0] / wsum), detail::clamp_byte(acc[1] / wsum),
                         detail::clamp_byte(acc[2] / wsum)});
            }

    } else if (std::holds_alternative<RadialBlurFilter>(spec)) {
        const auto& rb = std::get<RadialBlurFilter>(spec);
        int samples = rb.quality == RadialBlurFilter::Quality::Best
                          ? 7
                          : rb.quality == RadialBlurFilter::Quality::Good ? 5 : 3;
        double cx = region.x + region.w / 2.0, cy = region.y + region.h / 2.0;
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                double acc[3] = {0, 0, 0};
                for (int i = 0; i < samples; ++i) {
                    double t = samples == 1 ? 0.0 : (i / double(samples - 1) - 0.5);
                    double sx, sy;
                    if (rb.method == RadialBlurFilter::Method::Spin) {
                        double a = t * 6.0 * 3.14159265358979323846 / 180.0;
                        double dx = x - cx, dy = y - cy;
                        sx = cx + dx * std::cos(a) - dy * std::sin(a);
                        sy = cy + dx * std::sin(a) + dy * std::cos(a);
                    } else {
                        double f = 1.0 + t * 0.06;
                        sx = cx + (x - cx) * f;
                        sy = cy + (y - cy) * f;
                    }
                    Rgb c = img.get_clamped(static_cast<int>(std::lround(sx)),
                                            static_cast<int>(std::lround(sy)));
                    acc[0] += c.r;
                    acc[1] += c.g;
                    acc[2] += c.b;
                }
                out.set(x, y,
                        {detail::clamp_byte(acc[0] / samples),
                         detail::clamp_byte(acc[1] / samples),
                         detail::clamp_byte(acc[2] / samples)});
            }

    } else if (std::holds_alternative<LensBlurFilter>(spec)) {
        const auto& lb = std::get<LensBlurFilter>(spec);
        double r = lb.aperture_radius * 8.0;
        // bokeh kernel: points inside the (curvature-blended) aperture polygon
        std::vector<std::pair<int, int>> taps;
        int half = std::max(1, static_cast<int>(std::ceil(r)));
        double rot = lb.rotation * 3.14159265358979323846 / 180.0;
        int sides = std::clamp(lb.aperture_sides, 3, 8);
        double apothem_scale = std::cos(3.14159265358979323846 / sides);
        for (int dy = -half; dy <= half; ++dy)
            for (int dx = -half; dx <= half; ++dx) {
                double d = std::sqrt(double(dx * dx + dy * dy));
                if (d > r) continue;
                if (d > 1e-9 && r > 0) {
                    // polygon boundary at this angle, blended toward a disc
                    double a = std::atan2(dy, dx) - rot;
                    double sector = 2.0 * 3.14159265358979323846 / sides;
                    double local = std::fmod(std::fmod(a, sector) + sector, sector) -
                                   sector / 2.0;
                    double poly_r = r * apothem_scale / std::cos(local);
                    double edge = (1.0 - lb.blade_curvature) * poly_r + lb.blade_curvature * r;
                    if (d > edge) continue;
                }
                taps.push_back({dx, dy});
            }
        if (taps.empty()) taps.push_back({0, 0});
        double cutoff = lb.threshold / 100.0 * 255.0;
        double boost = lb.brightness / 100.0;
        for (int y = region.y; y < region.bottom(); ++y)
            for (int x = region.x; x < region.right(); ++x) {
                double acc[3] = {0, 0, 0}, wsum = 0.0;
                for (auto [dx, dy] : taps) {
                    Rgb c = img.get_clamped(x + dx, y + dy);
                    double luma = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
                    double w = luma >= cutoff ? boost : 1.0;
                    acc[0] += w * c.r;
                    acc[1] += w * c.g;
                    acc[2] += w * c.b;
                    wsum += w;
                }
                double v[3] = {acc[0] / wsum, acc[1] / wsum, acc[2] / wsum};
                if (lb.noise_amount > 0.0) {
                    uint64_t h = detail::pixel_hash(x, y, 0x1E75B1u);
                    double u = (h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
                    double mag = lb.noise_amount / 100.0 * 255.0;
                    double delta = lb.noise_gaussian ? u * mag / 3.0 : u * mag;
                    for (double& ch : v) ch += delta;
                }
                out.set(x, y, {detail::clamp_byte(v[0]), detail::clamp_byte(v[1]),
                               detail::clamp_byte(v[2])});
            }
    }

    return out;
}

}  // namespace fsts
