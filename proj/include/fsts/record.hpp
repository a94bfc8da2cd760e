#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsts/annotations.hpp"
#include "fsts/sampler.hpp"
#include "fsts/types.hpp"

namespace fsts {

// The per-sample editing log. A record holds every resolved decision of one
// synthesized sample and is sufficient to re-execute it bit-identically
// given the same source images. Serialized as one JSON document per sample
// with a format_version field; wall-clock timings deliberately stay out of
// the file so reruns produce identical bytes.

struct ItemRecord {
    TamperType type = TamperType::CopyMove;
    RegionAnnotation target;
    std::optional<RegionAnnotation> copy_source;  // copy-move
    std::string splice_image;                     // splicing: resolved pool id
    Rect splice_region;                           // splicing: resolved source rect
    std::string text;                             // insertion/replacement payload
    std::optional<Rgb> ink;                       // resolved text color
    std::vector<ResolvedChoice> choices;
    Rect effective;  // filled during execution

    bool operator==(const ItemRecord&) const = default;
};

struct SampleRecord {
    std::string sample_id;
    uint64_t master_seed = 0;
    std::string source_image;  // pool id of the original
    std::vector<ItemRecord> items;
    double elapsed_ms = 0.0;  // in-memory only, never serialized

    bool equivalent(const SampleRecord& o) const {
        return sample_id == o.sample_id && master_seed == o.master_seed &&
               source_image == o.source_image && items == o.items;
    }
};

namespace detail {

using nlohmann::json;

inline json rect_to_json(const Rect& r) { return json{r.x, r.y, r.w, r.h}; }

inline Rect rect_from_json(const json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>()};
}

inline json annotation_to_json(const RegionAnnotation& a) {
    json j;
    j["id"] = a.id;
    j["rect"] = rect_to_json(a.rect);
    j["kind"] = std::string(to_string(a.kind));
    if (!a.text.empty()) j["text"] = a.text;
    return j;
}

inline RegionAnnotation annotation_from_json(const json& j) {
    RegionAnnotation a;
    a.id = j.at("id").get<std::string>();
    a.rect = rect_from_json(j.at("rect"));
    a.kind = j.at("kind").get<std::string>() == "text" ? RegionKind::Text
                                                       : RegionKind::NonText;
    a.text = j.value("text", "");
    return a;
}

inline json param_value_to_json(const ParamValue& v) {
    switch (v.type) {
        case ParamValue::Type::Integer: return json{{"i", v.i}};
        case ParamValue::Type::Real: return json{{"r", v.r}};
        case ParamValue::Type::Text: return json{{"s", v.s}};
        case ParamValue::Type::Color: return json{{"c", {v.color.r, v.color.g, v.color.b}}};
        case ParamValue::Type::IntList: return json{{"l", v.list}};
    }
    throw Error("unreachable param value type");
}

inline ParamValue param_value_from_json(const json& j) {
    if (j.contains("i")) return ParamValue::integer(j.at("i").get<int64_t>());
    if (j.contains("r")) return ParamValue::real(j.at("r").get<double>());
    if (j.contains("s")) return ParamValue::text(j.at("s").get<std::string>());
    if (j.contains("c")) {
        auto& c = j.at("c");
        return ParamValue::rgb({c.at(0).get<uint8_t>(), c.at(1).get<uint8_t>(),
                                c.at(2).get<uint8_t>()});
    }
    if (j.contains("l")) return ParamValue::ints(j.at("l").get<std::vector<int>>());
    throw ParseError("record: unknown param value encoding");
}

inline json choice_to_json(const ResolvedChoice& c) {
    json j;
    j["op_id"] = c.op_id;
    j["variant"] = c.variant;
    j["step"] = c.step_index;
    j["phase"] = std::string(to_string(c.phase));
    // array of single-pair objects keeps declaration order
    json params = json::array();
    for (const auto& p : c.params) {
        json entry = param_value_to_json(p.value);
        entry["name"] = p.name;
        params.push_back(entry);
    }
    j["params"] = params;
    return j;
}

inline ResolvedChoice choice_from_json(const json& j) {
    ResolvedChoice c;
    c.op_id = j.at("op_id").get<std::string>();
    c.variant = j.at("variant").get<std::string>();
    c.step_index = j.at("step").get<int>();
    c.phase = j.at("phase").get<std::string>() == "post-processing" ? StepPhase::Post
                                                                    : StepPhase::Main;
    for (const auto& entry : j.at("params"))
        c.params.push_back(
            {entry.at("name").get<std::string>(), param_value_from_json(entry)});
    return c;
}

}  // namespace detail

inline std::string serialize_record(const SampleRecord& r) {
    using nlohmann::json;
    json root;
    root["format_version"] = 1;
    root["sample_id"] = r.sample_id;
    root["master_seed"] = r.master_seed;
    root["source_image"] = r.source_image;
    json items = json::array();
    for (const auto& item : r.items) {
        json j;
        j["type"] = std::string(to_string(item.type));
        j["target"] = detail::annotation_to_json(item.target);
        if (item.copy_source) j["copy_source"] = detail::annotation_to_json(*item.copy_source);
        if (!item.splice_image.empty()) {
            j["splice_image"] = item.splice_image;
            j["splice_region"] = detail::rect_to_json(item.splice_region);
        }
        if (!item.text.empty()) j["text"] = item.text;
        if (item.ink) j["ink"] = {item.ink->r, item.ink->g, item.ink->b};
        json choices = json::array();
        for (const auto& c : item.choices) choices.push_back(detail::choice_to_json(c));
        j["choices"] = choices;
        j["effective"] = detail::rect_to_json(item.effective);
        items.push_back(j);
    }
    root["items"] = items;
    return root.dump(2) + "\n";
}

inline SampleRecord parse_record(const std::string& text) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("record parse failure: ") + e.what());
    }
    if (root.at("format_version").get<int>() != 1)
        throw ParseError("unsupported record format_version");
    SampleRecord r;
    r.sample_id = root.at("sample_id").get<std::string>();
    r.master_seed = root.at("master_seed").get<uint64_t>();
    r.source_image = root.at("source_image").get<std::string>();
    for (const auto& j : root.at("items")) {
        ItemRecord item;
        item.type = tamper_type_from_string(j.at("type").get<std::string>());
        item.target = detail::annotation_from_json(j.at("target"));
        if (j.contains("copy_source"))
            item.copy_source = detail::annotation_from_json(j.at("copy_source"));
        if (j.contains("splice_image")) {
            item.splice_image = j.at("splice_image").get<std::string>();
            item.splice_region = detail::rect_from_json(j.at("splice_region"));
        }
        item.text = j.value("text", "");
        if (j.contains("ink")) {
            auto& c = j.at("ink");
            item.ink = Rgb{c.at(0).get<uint8_t>(), c.at(1).get<uint8_t>(),
                           c.at(2).get<uint8_t>()};
        }
        for (const auto& c : j.at("choices"))
            item.choices.push_back(detail::choice_from_json(c));
        item.effective = detail::rect_from_json(j.at("effective"));
        r.items.push_back(std::move(item));
    }
    return r;
}

}  // namespace fsts
