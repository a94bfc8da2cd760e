#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <vector>

#include "fsts/annotations.hpp"
#include "fsts/types.hpp"

namespace fsts {

/// 8-bit RGB raster, row-major, tightly packed.
class ImageBuffer {
public:
    ImageBuffer() = default;
    ImageBuffer(int width, int height, Rgb fill = {0, 0, 0})
        : width_(width), height_(height),
          data_(static_cast<size_t>(width) * height * 3) {
        if (width < 1 || height < 1) throw Error("ImageBuffer: dimensions must be >= 1");
        for (size_t i = 0; i < data_.size(); i += 3) {
            data_[i] = fill.r;
            data_[i + 1] = fill.g;
            data_[i + 2] = fill.b;
        }
    }

    int width() const { return width_; }
    int height() const { return height_; }
    Rect bounds() const { return {0, 0, width_, height_}; }

    const uint8_t* data() const { return data_.data(); }
    uint8_t* data() { return data_.data(); }
    size_t size_bytes() const { return data_.size(); }

    Rgb get(int x, int y) const {
        const uint8_t* p = &data_[idx(x, y)];
        return {p[0], p[1], p[2]};
    }
    void set(int x, int y, Rgb c) {
        uint8_t* p = &data_[idx(x, y)];
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }
    uint8_t channel(int x, int y, int c) const { return data_[idx(x, y) + c]; }
    void set_channel(int x, int y, int c, uint8_t v) { data_[idx(x, y) + c] = v; }

    /// Clamped fetch: coordinates outside the image read the nearest edge
    /// pixel. Kernel edge handling everywhere in the library.
    Rgb get_clamped(int x, int y) const {
        x = std::clamp(x, 0, width_ - 1);
        y = std::clamp(y, 0, height_ - 1);
        return get(x, y);
    }

    ImageBuffer crop(const Rect& r) const {
        Rect c = r.clipped(width_, height_);
        if (c.empty()) throw Error("crop: empty rectangle");
        ImageBuffer out(c.w, c.h);
        for (int y = 0; y < c.h; ++y)
            std::memcpy(out.data_.data() + static_cast<size_t>(y) * c.w * 3,
                        data_.data() + idx(c.x, c.y + y), static_cast<size_t>(c.w) * 3);
        return out;
    }

    void fill_rect(const Rect& r, Rgb color) {
        Rect c = r.clipped(width_, height_);
        for (int y = c.y; y < c.bottom(); ++y)
            for (int x = c.x; x < c.right(); ++x) set(x, y, color);
    }

    bool operator==(const ImageBuffer&) const = default;

private:
    size_t idx(int x, int y) const {
        return (static_cast<size_t>(y) * width_ + x) * 3;
    }

    int width_ = 0, height_ = 0;
    std::vector<uint8_t> data_;
};

/// Single-channel binary mask paired with an image of equal dimensions.
class PixelMask {
public:
    PixelMask() = default;
    PixelMask(int width, int height, uint8_t fill = 0)
        : width_(width), height_(height),
          bits_(static_cast<size_t>(width) * height, fill ? 1 : 0) {
        if (width < 1 || height < 1) throw Error("PixelMask: dimensions must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool get(int x, int y) const { return bits_[static_cast<size_t>(y) * width_ + x] != 0; }
    void set(int x, int y, bool v) { bits_[static_cast<size_t>(y) * width_ + x] = v ? 1 : 0; }

    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits_) n += b;
        return n;
    }

    const std::vector<uint8_t>& raw() const { return bits_; }

    bool operator==(const PixelMask&) const = default;

private:
    int width_ = 0, height_ = 0;
    std::vector<uint8_t> bits_;
};

/// Rectangle plus optional per-pixel coverage (0..255) within it. Coverage
/// 255 means fully foreground; anti-aliased shape edges carry intermediate
/// values.
struct RegionShape {
    Rect rect;
    std::vector<uint8_t> coverage;  // empty, or rect.w * rect.h entries

    bool has_shape() const { return !coverage.empty(); }

    uint8_t coverage_at(int x, int y) const {  // rect-local coordinates
        if (coverage.empty()) return 255;
        return coverage[static_cast<size_t>(y) * rect.w + x];
    }
};

/// 3x3 morphological dilation of a binary mask.
inline PixelMask dilate3x3(const PixelMask& in) {
    PixelMask out(in.width(), in.height());
    for (int y = 0; y < in.height(); ++y)
        for (int x = 0; x < in.width(); ++x) {
            bool v = false;
            for (int dy = -1; dy <= 1 && !v; ++dy)
                for (int dx = -1; dx <= 1 && !v; ++dx) {
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= in.width() || ny >= in.height()) continue;
                    v = in.get(nx, ny);
                }
            out.set(x, y, v);
        }
    return out;
}

/// 3x3 morphological erosion. Out-of-bounds neighbors count as foreground,
/// so closing (dilate then erode) never loses set pixels at image borders.
inline PixelMask erode3x3(const PixelMask& in) {
    PixelMask out(in.width(), in.height());
    for (int y = 0; y < in.height(); ++y)
        for (int x = 0; x < in.width(); ++x) {
            bool v = true;
            for (int dy = -1; dy <= 1 && v; ++dy)
                for (int dx = -1; dx <= 1 && v; ++dx) {
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= in.width() || ny >= in.height()) continue;
                    v = in.get(nx, ny);
                }
            out.set(x, y, v);
        }
    return out;
}

/// Closing = dilation then erosion; fills single-pixel holes without
/// shrinking the original set.
inline PixelMask close3x3(const PixelMask& in) { return erode3x3(dilate3x3(in)); }

inline int connected_components(const PixelMask& m) {
    std::vector<char> seen(static_cast<size_t>(m.width()) * m.height(), 0);
    std::vector<std::pair<int, int>> stack;
    int components = 0;
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x) {
            if (!m.get(x, y) || seen[static_cast<size_t>(y) * m.width() + x]) continue;
            ++components;
            stack.push_back({x, y});
            seen[static_cast<size_t>(y) * m.width() + x] = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                const int nx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
                const int ny[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
                for (int k = 0; k < 8; ++k) {
                    int px = cx + nx[k], py = cy + ny[k];
                    if (px < 0 || py < 0 || px >= m.width() || py >= m.height()) continue;
                    size_t i = static_cast<size_t>(py) * m.width() + px;
                    if (!m.get(px, py) || seen[i]) continue;
                    seen[i] = 1;
                    stack.push_back({px, py});
                }
            }
        }
    return components;
}

}  // namespace fsts
