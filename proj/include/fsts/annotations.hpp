#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsts/types.hpp"

namespace fsts {

struct Rect {
    int x = 0, y = 0, w = 0, h = 0;

    bool empty() const { return w <= 0 || h <= 0; }
    int right() const { return x + w; }
    int bottom() const { return y + h; }

    bool contains(int px, int py) const {
        return px >= x && px < right() && py >= y && py < bottom();
    }

    bool intersects(const Rect& o) const {
        return !(o.x >= right() || o.right() <= x || o.y >= bottom() || o.bottom() <= y);
    }

    Rect intersect(const Rect& o) const {
        int nx = std::max(x, o.x), ny = std::max(y, o.y);
        int nr = std::min(right(), o.right()), nb = std::min(bottom(), o.bottom());
        if (nr <= nx || nb <= ny) return {};
        return {nx, ny, nr - nx, nb - ny};
    }

    Rect united(const Rect& o) const {
        if (empty()) return o;
        if (o.empty()) return *this;
        int nx = std::min(x, o.x), ny = std::min(y, o.y);
        int nr = std::max(right(), o.right()), nb = std::max(bottom(), o.bottom());
        return {nx, ny, nr - nx, nb - ny};
    }

    Rect dilated(int margin) const { return {x - margin, y - margin, w + 2 * margin, h + 2 * margin}; }

    Rect clipped(int img_w, int img_h) const {
        return intersect({0, 0, img_w, img_h});
    }

    bool operator==(const Rect&) const = default;
};

enum class RegionKind { Text, NonText };

inline std::string_view to_string(RegionKind k) {
    return k == RegionKind::Text ? "text" : "non-text";
}

struct RegionAnnotation {
    std::string id;
    Rect rect;
    RegionKind kind = RegionKind::Text;
    std::string text;  // optional ground-truth string

    bool operator==(const RegionAnnotation&) const = default;
};

/// Parses a sidecar annotation document: a JSON list of
/// {id, x, y, w, h, kind, text?}. Bounds are checked against the paired
/// image dimensions when provided (pass 0,0 to skip).
inline std::vector<RegionAnnotation> parse_annotations(const std::string& text,
                                                       int image_w = 0, int image_h = 0) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("annotation parse failure: ") + e.what());
    }
    if (!root.is_array()) throw ParseError("annotation document must be a JSON list");
    std::vector<RegionAnnotation> out;
    for (const auto& j : root) {
        RegionAnnotation a;
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string k = it.key();
            if (k != "id" && k != "x" && k != "y" && k != "w" && k != "h" && k != "kind" &&
                k != "text")
                throw ParseError("unknown annotation key '" + k + "'");
        }
        a.id = j.at("id").get<std::string>();
        a.rect.x = j.at("x").get<int>();
        a.rect.y = j.at("y").get<int>();
        a.rect.w = j.at("w").get<int>();
        a.rect.h = j.at("h").get<int>();
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "text") a.kind = RegionKind::Text;
        else if (kind == "non-text") a.kind = RegionKind::NonText;
        else throw ParseError("annotation '" + a.id + "': unknown kind '" + kind + "'");
        a.text = j.value("text", "");
        if (a.rect.w <= 0 || a.rect.h <= 0)
            throw ValidationError("annotation '" + a.id + "': degenerate rectangle");
        if (image_w > 0 && image_h > 0) {
            if (a.rect.x < 0 || a.rect.y < 0 || a.rect.right() > image_w ||
                a.rect.bottom() > image_h)
                throw ValidationError("annotation '" + a.id + "': rectangle outside image");
        }
        out.push_back(std::move(a));
    }
    return out;
}

inline std::string serialize_annotations(const std::vector<RegionAnnotation>& annotations) {
    using nlohmann::json;
    json root = json::array();
    for (const auto& a : annotations) {
        json j;
        j["id"] = a.id;
        j["x"] = a.rect.x;
        j["y"] = a.rect.y;
        j["w"] = a.rect.w;
        j["h"] = a.rect.h;
        j["kind"] = std::string(to_string(a.kind));
        if (!a.text.empty()) j["text"] = a.text;
        root.push_back(j);
    }
    return root.dump(2) + "\n";
}

inline std::vector<RegionAnnotation> load_annotations(const std::string& path,
                                                      int image_w = 0, int image_h = 0) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open annotation file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_annotations(text, image_w, image_h);
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace fsts
