#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fsts/image.hpp"
#include "fsts/raster/font_data.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Glyph rendering from embedded 1-bit masters. Glyphs scale to the target
// region height with box-filter coverage; the anti-aliasing mode quantizes
// that coverage:
//
//   none     hard threshold at 0.5
//   sharp    gain 1.8 around 0.5
//   crisp    gain 1.4 around 0.5
//   smooth   linear coverage
//   strong   coverage boosted by 1.35, then clamped
//
// A font directory can override or add families with .fsfont files (see
// FontLibrary::load_directory for the format). Unknown families are an
// error; nothing substitutes silently.

enum class AntiAliasMode { None, Sharp, Crisp, Smooth, Strong };

inline AntiAliasMode anti_alias_from_string(std::string_view s) {
    if (s == "none") return AntiAliasMode::None;
    if (s == "sharp") return AntiAliasMode::Sharp;
    if (s == "crisp") return AntiAliasMode::Crisp;
    if (s == "smooth") return AntiAliasMode::Smooth;
    if (s == "strong") return AntiAliasMode::Strong;
    throw ParseError("unknown anti-aliasing mode: " + std::string(s));
}

struct TextStyle {
    std::string family = "microsoft-yahei";
    AntiAliasMode anti_alias = AntiAliasMode::Smooth;
    Rgb color = {0, 0, 0};
};

namespace detail {

struct OwnedGlyph {
    int advance = 0, width = 0, height = 0, bearing_x = 0, bearing_y = 0;
    std::vector<uint8_t> rows;  // packed 1-bit, MSB leftmost
};

struct FontFace {
    std::string family;
    int pixel_size = 0, ascent = 0, descent = 0;
    std::vector<OwnedGlyph> glyphs;  // chars 32..126

    const OwnedGlyph* glyph(char c) const {
        int idx = static_cast<unsigned char>(c) - 32;
        if (idx < 0 || idx >= static_cast<int>(glyphs.size())) return nullptr;
        return &glyphs[static_cast<size_t>(idx)];
    }

    bool master_bit(const OwnedGlyph& g, int x, int y) const {
        if (x < 0 || y < 0 || x >= g.width || y >= g.height) return false;
        int rowbytes = (g.width + 7) / 8;
        return (g.rows[static_cast<size_t>(y) * rowbytes + x / 8] >> (7 - x % 8)) & 1;
    }
};

inline FontFace face_from_builtin(const font_data::Face& src) {
    FontFace f;
    f.family = src.family;
    f.pixel_size = src.pixel_size;
    f.ascent = src.ascent;
    f.descent = src.descent;
    for (int i = 0; i < 95; ++i) {
        const auto& g = src.glyphs[i];
        OwnedGlyph og;
        og.advance = g.advance;
        og.width = g.width;
        og.height = g.height;
        og.bearing_x = g.bearing_x;
        og.bearing_y = g.bearing_y;
        int rowbytes = (g.width + 7) / 8;
        og.rows.assign(src.bitmap + g.offset,
                       src.bitmap + g.offset + static_cast<size_t>(rowbytes) * g.height);
        f.glyphs.push_back(std::move(og));
    }
    return f;
}

}  // namespace detail

class FontLibrary {
public:
    /// Library preloaded with the five built-in fallback faces.
    static const FontLibrary& builtin() {
        static FontLibrary lib = [] {
            FontLibrary l;
            for (const auto& face : font_data::k_builtin_faces)
                l.faces_[face.family] = detail::face_from_builtin(face);
            return l;
        }();
        return lib;
    }

    FontLibrary() = default;

    /// Starts from the built-ins and overlays every .fsfont file found in
    /// `dir`. File format (text):
    ///
    ///   fsfont 1
    ///   family <name>
    ///   metrics <pixel_size> <ascent> <descent>
    ///   glyph <codepoint 32..126> <advance> <w> <h> <bearing_x> <bearing_y>
    ///   <h lines of row hex, (w+7)/8 bytes each>
    static FontLibrary with_directory(const std::string& dir) {
        FontLibrary lib = builtin();
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".fsfont")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            auto face = parse_fsfont(p.string());
            lib.faces_[face.family] = std::move(face);
        }
        return lib;
    }

    const detail::FontFace& resolve(const std::string& family) const {
        auto it = faces_.find(family);
        if (it == faces_.end())
            throw Error("unresolvable font family: '" + family + "'");
        return it->second;
    }

    std::vector<std::string> families() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : faces_) out.push_back(k);
        return out;
    }

private:
    static detail::FontFace parse_fsfont(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open font file " + path);
        detail::FontFace face;
        std::string line;
        size_t line_no = 0;
        auto fail = [&](const std::string& what) -> ParseError {
            return ParseError(path + ":" + std::to_string(line_no) + ": " + what);
        };
        if (!std::getline(in, line) || line.rfind("fsfont 1", 0) != 0)
            throw ParseError(path + ": missing 'fsfont 1' header");
        face.glyphs.resize(95);
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string kw;
            ls >> kw;
            if (kw == "family") {
                ls >> face.family;
            } else if (kw == "metrics") {
                ls >> face.pixel_size >> face.ascent >> face.descent;
            } else if (kw == "glyph") {
                int cp;
                detail::OwnedGlyph g;
                ls >> cp >> g.advance >> g.width >> g.height >> g.bearing_x >> g.bearing_y;
                if (cp < 32 || cp > 126) throw fail("codepoint outside 32..126");
                int rowbytes = (g.width + 7) / 8;
                for (int y = 0; y < g.height; ++y) {
                    if (!std::getline(in, line)) throw fail("truncated glyph rows");
                    ++line_no;
                    if (static_cast<int>(line.size()) < rowbytes * 2)
                        throw fail("short row hex");
                    for (int b = 0; b < rowbytes; ++b) {
                        auto hex = line.substr(static_cast<size_t>(b) * 2, 2);
                        g.rows.push_back(
                            static_cast<uint8_t>(std::stoi(hex, nullptr, 16)));
                    }
                }
                face.glyphs[static_cast<size_t>(cp - 32)] = std::move(g);
            } else {
                throw fail("unknown keyword '" + kw + "'");
            }
        }
        if (face.family.empty() || face.pixel_size <= 0)
            throw ParseError(path + ": missing family or metrics");
        return face;
    }

    std::map<std::string, detail::FontFace> faces_;
};

namespace detail {

/// Box-filter coverage of one output pixel against a glyph's 1-bit master:
/// the fraction of the back-projected square covered by set bits.
inline double glyph_coverage(const FontFace& face, const OwnedGlyph& g, double u0,
                             double v0, double u1, double v1) {
    if (u1 <= 0 || v1 <= 0 || u0 >= g.width || v0 >= g.height) return 0.0;
    double area = (u1 - u0) * (v1 - v0);
    if (area <= 0) return 0.0;
    int x0 = std::max(0, static_cast<int>(std::floor(u0)));
    int y0 = std::max(0, static_cast<int>(std::floor(v0)));
    int x1 = std::min(g.width - 1, static_cast<int>(std::ceil(u1)) - 1);
    int y1 = std::min(g.height - 1, static_cast<int>(std::ceil(v1)) - 1);
    double covered = 0.0;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            if (!face.master_bit(g, x, y)) continue;
            double ox = std::min(u1, x + 1.0) - std::max(u0, static_cast<double>(x));
            double oy = std::min(v1, y + 1.0) - std::max(v0, static_cast<double>(y));
            if (ox > 0 && oy > 0) covered += ox * oy;
        }
    return covered / area;
}

inline double quantize_coverage(double c, AntiAliasMode mode) {
    switch (mode) {
        case AntiAliasMode::None: return c >= 0.5 ? 1.0 : 0.0;
        case AntiAliasMode::Sharp: return std::clamp(0.5 + (c - 0.5) * 1.8, 0.0, 1.0);
        case AntiAliasMode::Crisp: return std::clamp(0.5 + (c - 0.5) * 1.4, 0.0, 1.0);
        case AntiAliasMode::Smooth: return c;
        case AntiAliasMode::Strong: return std::min(1.0, c * 1.35);
    }
    return c;
}

}  // namespace detail

struct TextRenderResult {
    ImageBuffer image;
    RegionShape glyphs;  // coverage of the rendered text within the region
};

/// Rasterizes `text` into `region`: glyph size fits the region height,
/// baseline-aligned, horizontally clipped to the region. The result carries
/// the quantized glyph coverage used for blending, so effects can reuse the
/// exact shape.
inline TextRenderResult render_text_into(const ImageBuffer& img, const Rect& region_in,
                                         const std::string& text, const TextStyle& style,
                                         const FontLibrary& fonts = FontLibrary::builtin()) {
    Rect region = region_in.clipped(img.width(), img.height());
    if (region.h <= 0 || region.w <= 0) throw Error("render_text_into: zero-size region");
    if (text.empty() || text.size() > 64)
        throw Error("render_text_into: text length outside 1..64");
    const detail::FontFace& face = fonts.resolve(style.family);

    double em = face.ascent + face.descent;
    double scale = region.h / em;

    TextRenderResult result;
    result.image = img;
    result.glyphs.rect = region;
    result.glyphs.coverage.assign(static_cast<size_t>(region.w) * region.h, 0);

    double pen_x = 0.0;  // region-local
    const double line_top = 0.0;
    for (char ch : text) {
        const detail::OwnedGlyph* g = face.glyph(ch);
        if (!g) g = face.glyph('?');
        if (!g) continue;
        if (g->width > 0 && g->height > 0) {
            double gx0 = pen_x + g->bearing_x * scale;
            double gy0 = line_top + g->bearing_y * scale;
            int px0 = std::max(0, static_cast<int>(std::floor(gx0)));
            int py0 = std::max(0, static_cast<int>(std::floor(gy0)));
            int px1 = std::min(region.w - 1,
                               static_cast<int>(std::ceil(gx0 + g->width * scale)));
            int py1 = std::min(region.h - 1,
                               static_cast<int>(std::ceil(gy0 + g->height * scale)));
            for (int y = py0; y <= py1; ++y)
                for (int x = px0; x <= px1; ++x) {
                    // back-project the output pixel into master space
                    double u0 = (x - gx0) / scale, u1 = (x + 1 - gx0) / scale;
                    double v0 = (y - gy0) / scale, v1 = (y + 1 - gy0) / scale;
                    double c = detail::glyph_coverage(face, *g, u0, v0, u1, v1);
                    c = detail::quantize_coverage(c, style.anti_alias);
                    if (c <= 0.0) continue;
                    auto& cell =
                        result.glyphs.coverage[static_cast<size_t>(y) * region.w + x];
                    cell = std::max(cell, static_cast<uint8_t>(std::lround(c * 255.0)));
                }
        }
        pen_x += g->advance * scale;
        if (pen_x >= region.w) break;  // horizontal clip
    }

    for (int y = 0; y < region.h; ++y)
        for (int x = 0; x < region.w; ++x) {
            uint8_t cov = result.glyphs.coverage[static_cast<size_t>(y) * region.w + x];
            if (cov == 0) continue;
            Rgb dst = result.image.get(region.x + x, region.y + y);
            auto mix = [&](uint8_t fg, uint8_t bg) {
                return static_cast<uint8_t>((fg * cov + bg * (255 - cov) + 127) / 255);
            };
            result.image.set(region.x + x, region.y + y,
                             {mix(style.color.r, dst.r), mix(style.color.g, dst.g),
                              mix(style.color.b, dst.b)});
        }
    return result;
}

/// Mean luma of a rectangle; > 128 counts as a light background.
inline double mean_luma(const ImageBuffer& img, const Rect& r_in) {
    Rect r = r_in.clipped(img.width(), img.height());
    if (r.empty()) throw Error("mean_luma: empty rect");
    double acc = 0.0;
    for (int y = r.y; y < r.bottom(); ++y)
        for (int x = r.x; x < r.right(); ++x) {
            Rgb c = img.get(x, y);
            acc += 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
        }
    return acc / (static_cast<double>(r.w) * r.h);
}

}  // namespace fsts
