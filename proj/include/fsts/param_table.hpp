#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsts/types.hpp"

namespace fsts {

// The tampering-parameter data model. A ParameterTable holds, for each of the
// five tampering types, an ordered list of processing steps; each step holds
// variant groups; variants within one group are mutually exclusive and carry
// a usage frequency. Frequencies inside a group may sum below 1 - the
// remainder (residual_none) is the probability that the group is skipped.

enum class ParamKind { IntegerRange, RealRange, Categorical, ColorRange, Fixed };
enum class ParamUnit { None, Pixels, Degrees, Percent, Levels, Characters, Zones };
enum class StepPhase { Main, Post };

inline std::string_view to_string(ParamKind k) {
    switch (k) {
        case ParamKind::IntegerRange: return "integer-range";
        case ParamKind::RealRange: return "real-range";
        case ParamKind::Categorical: return "categorical";
        case ParamKind::ColorRange: return "color-range";
        case ParamKind::Fixed: return "fixed";
    }
    return "?";
}

inline std::string_view to_string(ParamUnit u) {
    switch (u) {
        case ParamUnit::None: return "none";
        case ParamUnit::Pixels: return "pixels";
        case ParamUnit::Degrees: return "degrees";
        case ParamUnit::Percent: return "percent";
        case ParamUnit::Levels: return "levels";
        case ParamUnit::Characters: return "characters";
        case ParamUnit::Zones: return "zones";
    }
    return "?";
}

inline std::string_view to_string(StepPhase p) {
    return p == StepPhase::Main ? "main-processing" : "post-processing";
}

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Fixed;
    ParamUnit unit = ParamUnit::None;
    double min = 0.0, max = 0.0;                    // integer/real ranges
    int count = 1;                                  // draws per resolution (conv kernel = 25)
    std::vector<std::string> choices;               // categorical
    std::array<std::array<int, 2>, 3> channel = {}; // color-range, per RGB channel
    double fixed_number = 0.0;                      // fixed numeric value
    std::string fixed_text;                         // fixed text value
    bool fixed_is_number = false;

    bool operator==(const ParamSpec&) const = default;
};

struct OperationVariant {
    std::string op_id;    // hierarchical index, e.g. "2.1"
    std::string name;     // stable identifier, e.g. "content-aware-fill"
    std::string label;    // display string, e.g. "Content-Aware Fill"
    std::vector<ParamSpec> params;
    double frequency = 0.0;

    bool operator==(const OperationVariant&) const = default;
};

struct VariantGroup {
    std::string op_id;
    std::vector<OperationVariant> variants;
    double residual_none = 0.0;  // 1 - sum(frequencies), the skip probability

    double frequency_mass() const {
        double s = 0.0;
        for (const auto& v : variants) s += v.frequency;
        return s;
    }

    const OperationVariant* find(std::string_view name) const {
        for (const auto& v : variants)
            if (v.name == name) return &v;
        return nullptr;
    }

    bool operator==(const VariantGroup&) const = default;
};

struct StepSpec {
    int index = 0;
    std::string name;
    StepPhase phase = StepPhase::Main;
    std::vector<VariantGroup> groups;

    bool operator==(const StepSpec&) const = default;
};

struct TamperingTypeSpec {
    TamperType type = TamperType::CopyMove;
    std::vector<StepSpec> steps;

    const VariantGroup* find_group(std::string_view op_id) const {
        for (const auto& s : steps)
            for (const auto& g : s.groups)
                if (g.op_id == op_id) return &g;
        return nullptr;
    }

    bool operator==(const TamperingTypeSpec&) const = default;
};

struct ParameterTable {
    std::array<TamperingTypeSpec, kTamperTypeCount> types;
    std::array<double, kTamperTypeCount> type_weights = {0.2, 0.2, 0.2, 0.2, 0.2};
    double post_scale = 0.3;

    const TamperingTypeSpec& spec_for(TamperType t) const {
        return types[static_cast<int>(t)];
    }

    bool operator==(const ParameterTable&) const = default;
};

/// One failed invariant; `path` names the offending field.
struct Violation {
    std::string path;
    std::string message;
};

namespace detail {

inline bool valid_op_id(const std::string& id) {
    auto dot = id.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= id.size()) return false;
    for (size_t i = 0; i < id.size(); ++i) {
        if (i == dot) continue;
        if (id[i] < '0' || id[i] > '9') return false;
    }
    return true;
}

}  // namespace detail

/// Structural validation. Returns an empty list iff every invariant holds.
inline std::vector<Violation> validate_table(const ParameterTable& table) {
    std::vector<Violation> out;
    auto fail = [&](std::string path, std::string msg) {
        out.push_back({std::move(path), std::move(msg)});
    };

    if (!(table.post_scale > 0.0 && table.post_scale <= 1.0))
        fail("post_scale", "must be in (0,1]");
    for (int i = 0; i < kTamperTypeCount; ++i)
        if (table.type_weights[i] < 0.0)
            fail("type_weights." + std::string(to_string(kAllTamperTypes[i])),
                 "must be nonnegative");

    for (int ti = 0; ti < kTamperTypeCount; ++ti) {
        const auto& ts = table.types[ti];
        std::string tpath = std::string(to_string(kAllTamperTypes[ti]));
        if (ts.type != kAllTamperTypes[ti])
            fail(tpath, "type slot does not match its tampering type");
        if (ts.steps.empty()) fail(tpath, "no steps");

        int prev_index = 0;
        for (const auto& step : ts.steps) {
            std::string spath = tpath + ".step" + std::to_string(step.index);
            if (step.index <= prev_index)
                fail(spath, "step indices must be strictly increasing");
            prev_index = step.index;

            std::set<std::string> seen_ids;
            for (const auto& g : step.groups) {
                std::string gpath = spath + ".group" + g.op_id;
                if (!detail::valid_op_id(g.op_id))
                    fail(gpath, "op_id does not match <digits>.<digits>");
                if (!seen_ids.insert(g.op_id).second)
                    fail(gpath, "duplicate op_id " + g.op_id + " within step");
                if (g.variants.empty()) fail(gpath, "group has no variants");

                double sum = g.frequency_mass();
                if (sum > 1.0 + 1e-6) fail(gpath, "frequency sum exceeds 1");
                if (g.residual_none < -1e-9) fail(gpath, "residual_none negative");
                if (std::abs(sum + g.residual_none - 1.0) > 1e-6)
                    fail(gpath, "frequencies + residual_none != 1");

                for (const auto& v : g.variants) {
                    std::string vpath = gpath + "." + v.name;
                    if (v.frequency < 0.0 || v.frequency > 1.0)
                        fail(vpath, "frequency outside [0,1]");
                    if (v.op_id != g.op_id)
                        fail(vpath, "variant op_id differs from group op_id");
                    if (v.name.empty()) fail(vpath, "empty variant name");
                    for (const auto& p : v.params) {
                        std::string ppath = vpath + "." + p.name;
                        switch (p.kind) {
                            case ParamKind::IntegerRange:
                            case ParamKind::RealRange:
                                if (p.min > p.max) fail(ppath, "lower bound exceeds upper");
                                break;
                            case ParamKind::Categorical:
                                if (p.choices.empty()) fail(ppath, "empty categorical list");
                                break;
                            case ParamKind::ColorRange:
                                for (const auto& ch : p.channel) {
                                    if (ch[0] > ch[1]) fail(ppath, "channel lower exceeds upper");
                                    if (ch[0] < 0 || ch[1] > 255)
                                        fail(ppath, "channel bounds outside [0,255]");
                                }
                                break;
                            case ParamKind::Fixed:
                                break;
                        }
                        if (p.count < 1) fail(ppath, "count must be >= 1");
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization. The on-disk form is a UTF-8 JSON tree mirroring the model;
// unknown keys are rejected on load.
// ---------------------------------------------------------------------------

namespace detail {

using nlohmann::json;

inline void expect_keys(const json& j, const std::set<std::string>& allowed,
                        const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError("unknown key '" + it.key() + "' in " + where);
}

inline json param_to_json(const ParamSpec& p) {
    json j;
    j["name"] = p.name;
    j["kind"] = std::string(to_string(p.kind));
    if (p.unit != ParamUnit::None) j["unit"] = std::string(to_string(p.unit));
    switch (p.kind) {
        case ParamKind::IntegerRange:
        case ParamKind::RealRange:
            j["min"] = p.min;
            j["max"] = p.max;
            break;
        case ParamKind::Categorical:
            j["choices"] = p.choices;
            break;
        case ParamKind::ColorRange:
            j["channels"] = {{p.channel[0][0], p.channel[0][1]},
                             {p.channel[1][0], p.channel[1][1]},
                             {p.channel[2][0], p.channel[2][1]}};
            break;
        case ParamKind::Fixed:
            if (p.fixed_is_number)
                j["value"] = p.fixed_number;
            else
                j["value"] = p.fixed_text;
            break;
    }
    if (p.count != 1) j["count"] = p.count;
    return j;
}

inline ParamSpec param_from_json(const json& j, const std::string& where) {
    expect_keys(j, {"name", "kind", "unit", "min", "max", "choices", "channels",
                    "value", "count"},
                where);
    ParamSpec p;
    p.name = j.at("name").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integer-range") p.kind = ParamKind::IntegerRange;
    else if (kind == "real-range") p.kind = ParamKind::RealRange;
    else if (kind == "categorical") p.kind = ParamKind::Categorical;
    else if (kind == "color-range") p.kind = ParamKind::ColorRange;
    else if (kind == "fixed") p.kind = ParamKind::Fixed;
    else throw ParseError("unknown param kind '" + kind + "' in " + where);

    if (j.contains("unit")) {
        std::string u = j.at("unit").get<std::string>();
        bool ok = false;
        for (ParamUnit pu : {ParamUnit::Pixels, ParamUnit::Degrees, ParamUnit::Percent,
                             ParamUnit::Levels, ParamUnit::Characters, ParamUnit::Zones}) {
            if (to_string(pu) == u) {
                p.unit = pu;
                ok = true;
            }
        }
        if (!ok) throw ParseError("unknown unit '" + u + "' in " + where);
    }
    switch (p.kind) {
        case ParamKind::IntegerRange:
        case ParamKind::RealRange:
            p.min = j.at("min").get<double>();
            p.max = j.at("max").get<double>();
            break;
        case ParamKind::Categorical:
            p.choices = j.at("choices").get<std::vector<std::string>>();
            break;
        case ParamKind::ColorRange: {
            auto ch = j.at("channels");
            if (!ch.is_array() || ch.size() != 3)
                throw ParseError("channels must be a 3-element array in " + where);
            for (int i = 0; i < 3; ++i) {
                p.channel[i][0] = ch[i].at(0).get<int>();
                p.channel[i][1] = ch[i].at(1).get<int>();
            }
            break;
        }
        case ParamKind::Fixed: {
            const auto& v = j.at("value");
            if (v.is_number()) {
                p.fixed_is_number = true;
                p.fixed_number = v.get<double>();
            } else {
                p.fixed_text = v.get<std::string>();
            }
            break;
        }
    }
    if (j.contains("count")) p.count = j.at("count").get<int>();
    return p;
}

}  // namespace detail

inline std::string serialize_parameter_table(const ParameterTable& table) {
    using nlohmann::json;
    json root;
    root["format_version"] = 1;
    root["post_scale"] = table.post_scale;
    json weights;
    for (int i = 0; i < kTamperTypeCount; ++i)
        weights[std::string(to_string(kAllTamperTypes[i]))] = table.type_weights[i];
    root["type_weights"] = weights;

    json types;
    for (const auto& ts : table.types) {
        json steps = json::array();
        for (const auto& step : ts.steps) {
            json js;
            js["index"] = step.index;
            js["name"] = step.name;
            js["phase"] = std::string(to_string(step.phase));
            json groups = json::array();
            for (const auto& g : step.groups) {
                json jg;
                jg["op_id"] = g.op_id;
                json variants = json::array();
                for (const auto& v : g.variants) {
                    json jv;
                    jv["name"] = v.name;
                    jv["label"] = v.label;
                    jv["frequency"] = v.frequency;
                    json params = json::array();
                    for (const auto& p : v.params) params.push_back(detail::param_to_json(p));
                    jv["params"] = params;
                    variants.push_back(jv);
                }
                jg["variants"] = variants;
                groups.push_back(jg);
            }
            js["groups"] = groups;
            steps.push_back(js);
        }
        types[std::string(to_string(ts.type))] = json{{"steps", steps}};
    }
    root["types"] = types;
    return root.dump(2) + "\n";
}

/// Parses and validates a table document. Throws ParseError on malformed
/// input and ValidationError (first violation) on invariant failures.
inline ParameterTable load_parameter_table(const std::string& document) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("table parse failure: ") + e.what());
    }
    detail::expect_keys(root, {"format_version", "post_scale", "type_weights", "types"},
                        "table root");
    if (root.at("format_version").get<int>() != 1)
        throw ParseError("unsupported table format_version");

    ParameterTable table;
    table.post_scale = root.value("post_scale", 0.3);

    if (root.contains("type_weights")) {
        const auto& w = root.at("type_weights");
        detail::expect_keys(w,
                            {"copy-move", "splicing", "removal", "insertion", "replacement"},
                            "type_weights");
        for (int i = 0; i < kTamperTypeCount; ++i) {
            std::string key(to_string(kAllTamperTypes[i]));
            if (w.contains(key)) table.type_weights[i] = w.at(key).get<double>();
        }
    }

    const auto& types = root.at("types");
    for (int i = 0; i < kTamperTypeCount; ++i) {
        std::string key(to_string(kAllTamperTypes[i]));
        if (!types.contains(key)) throw ParseError("missing tampering type '" + key + "'");
    }
    detail::expect_keys(types, {"copy-move", "splicing", "removal", "insertion", "replacement"},
                        "types");

    for (int i = 0; i < kTamperTypeCount; ++i) {
        std::string key(to_string(kAllTamperTypes[i]));
        const auto& jt = types.at(key);
        detail::expect_keys(jt, {"steps"}, "type " + key);
        TamperingTypeSpec ts;
        ts.type = kAllTamperTypes[i];
        for (const auto& js : jt.at("steps")) {
            detail::expect_keys(js, {"index", "name", "phase", "groups"}, key + " step");
            StepSpec step;
            step.index = js.at("index").get<int>();
            step.name = js.at("name").get<std::string>();
            std::string phase = js.at("phase").get<std::string>();
            if (phase == "main-processing") step.phase = StepPhase::Main;
            else if (phase == "post-processing") step.phase = StepPhase::Post;
            else throw ParseError("unknown phase '" + phase + "' in " + key);
            for (const auto& jg : js.at("groups")) {
                std::string where = key + " step " + std::to_string(step.index);
                detail::expect_keys(jg, {"op_id", "variants"}, where);
                VariantGroup g;
                g.op_id = jg.at("op_id").get<std::string>();
                for (const auto& jv : jg.at("variants")) {
                    detail::expect_keys(jv, {"name", "label", "frequency", "params"},
                                        where + " group " + g.op_id);
                    OperationVariant v;
                    v.op_id = g.op_id;
                    v.name = jv.at("name").get<std::string>();
                    v.label = jv.value("label", v.name);
                    v.frequency = jv.at("frequency").get<double>();
                    if (v.frequency < 0.0 || v.frequency > 1.0)
                        throw ValidationError("frequency outside [0,1] at " + where + " " +
                                              v.name);
                    if (jv.contains("params"))
                        for (const auto& jp : jv.at("params"))
                            v.params.push_back(
                                detail::param_from_json(jp, where + " " + v.name));
                    g.variants.push_back(std::move(v));
                }
                double sum = g.frequency_mass();
                if (sum > 1.0 + 1e-6)
                    throw ValidationError("group frequency sum exceeds 1 at " + where +
                                          " group " + g.op_id);
                g.residual_none = std::max(0.0, 1.0 - sum);
                step.groups.push_back(std::move(g));
            }
            ts.steps.push_back(std::move(step));
        }
        table.types[i] = std::move(ts);
    }

    auto violations = validate_table(table);
    if (!violations.empty())
        throw ValidationError("invalid table: " + violations.front().path + ": " +
                              violations.front().message);
    return table;
}

}  // namespace fsts
