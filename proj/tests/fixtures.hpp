#pragma once

// Procedural source-image fixtures: paper-like backgrounds with rendered
// text lines and sidecar annotations, the corpus the pipeline tests and the
// acceptance suite run against.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "fsts/annotations.hpp"
#include "fsts/image.hpp"
#include "fsts/pipeline.hpp"
#include "fsts/raster/text.hpp"
#include "fsts/rng.hpp"

namespace testutil {

struct SourceFixture {
    std::string id;
    fsts::ImageBuffer image;
    std::vector<fsts::RegionAnnotation> annotations;
};

/// Document-like page: tinted background with mild vertical shading, several
/// lines of dark text (annotated as text regions), and a few blank regions
/// (annotated as non-text).
inline SourceFixture make_source(const std::string& id, uint64_t seed, int width = 256,
                                 int height = 192) {
    using namespace fsts;
    RngStream rng(seed);
    SourceFixture fx;
    fx.id = id;

    int base = static_cast<int>(rng.uniform_int(215, 245));
    int tint = static_cast<int>(rng.uniform_int(-6, 6));
    fx.image = ImageBuffer(width, height);
    for (int y = 0; y < height; ++y) {
        int shade = base - static_cast<int>(8.0 * y / height);
        for (int x = 0; x < width; ++x) {
            auto q = [&](int v) { return static_cast<uint8_t>(std::clamp(v, 0, 255)); };
            fx.image.set(x, y, {q(shade + tint), q(shade), q(shade - tint)});
        }
    }

    const char* words[] = {"INVOICE", "TOTAL",  "2024",   "Amount", "Ref",
                           "PAID",    "847.20", "Branch", "Date",   "X17B"};
    const char* families[] = {"times-new-roman", "microsoft-yahei", "simhei"};
    int lines = static_cast<int>(rng.uniform_int(5, 7));
    int line_h = 14;
    int y = 10;
    int region = 0;
    for (int l = 0; l < lines && y + line_h + 2 < height; ++l) {
        int columns = static_cast<int>(rng.uniform_int(1, 2));
        int x = 12;
        for (int col = 0; col < columns; ++col) {
            std::string word = words[rng.uniform_int(0, 9)];
            int w = std::min<int>(static_cast<int>(word.size()) * (line_h - 4), width - x - 12);
            if (w < 16) break;
            Rect rect = {x, y, w, line_h};
            int ink = static_cast<int>(rng.uniform_int(10, 70));
            TextStyle style;
            style.family = families[rng.uniform_int(0, 2)];
            style.anti_alias = AntiAliasMode::Smooth;
            style.color = {static_cast<uint8_t>(ink), static_cast<uint8_t>(ink),
                           static_cast<uint8_t>(ink + rng.uniform_int(0, 15))};
            auto res = render_text_into(fx.image, rect, word, style);
            fx.image = std::move(res.image);
            RegionAnnotation a;
            a.id = "r" + std::to_string(region++);
            a.rect = rect;
            a.kind = RegionKind::Text;
            a.text = word;
            fx.annotations.push_back(std::move(a));
            x += w + 24;
            if (x + 24 >= width) break;
        }
        y += line_h + static_cast<int>(rng.uniform_int(6, 14));
    }

    // blank strips along the bottom become non-text regions
    int blanks = 3;
    int bw = (width - 24) / blanks;
    for (int b = 0; b < blanks; ++b) {
        RegionAnnotation a;
        a.id = "blank" + std::to_string(b);
        a.rect = {12 + b * bw, height - 22, bw - 10, 14};
        a.kind = RegionKind::NonText;
        fx.annotations.push_back(std::move(a));
    }
    return fx;
}

inline std::vector<SourceFixture> make_corpus(int count, uint64_t seed) {
    std::vector<SourceFixture> out;
    for (int i = 0; i < count; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "src%03d", i);
        out.push_back(make_source(buf, seed + static_cast<uint64_t>(i) * 7919));
    }
    return out;
}

inline std::vector<fsts::SourceEntry> pool_view(const std::vector<SourceFixture>& corpus) {
    std::vector<fsts::SourceEntry> pool;
    for (const auto& fx : corpus) pool.push_back({fx.id, &fx.image, &fx.annotations});
    return pool;
}

}  // namespace testutil
