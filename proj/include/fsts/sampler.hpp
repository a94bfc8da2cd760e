#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fsts/annotations.hpp"
#include "fsts/fitting.hpp"
#include "fsts/param_table.hpp"
#include "fsts/rng.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Plan sampling: turns model + table + region annotations into a concrete,
// fully resolved TamperingPlan. Everything random flows through one
// RngStream; draw order is fixed (items in order, steps in table order,
// groups in table order, params in declaration order) so plans are a pure
// function of (model, table, regions, stream).

/// A resolved parameter value.
struct ParamValue {
    enum class Type { Integer, Real, Text, Color, IntList };
    Type type = Type::Integer;
    int64_t i = 0;
    double r = 0.0;
    std::string s;
    Rgb color;
    std::vector<int> list;

    static ParamValue integer(int64_t v) { ParamValue p; p.type = Type::Integer; p.i = v; return p; }
    static ParamValue real(double v) { ParamValue p; p.type = Type::Real; p.r = v; return p; }
    static ParamValue text(std::string v) { ParamValue p; p.type = Type::Text; p.s = std::move(v); return p; }
    static ParamValue rgb(Rgb v) { ParamValue p; p.type = Type::Color; p.color = v; return p; }
    static ParamValue ints(std::vector<int> v) { ParamValue p; p.type = Type::IntList; p.list = std::move(v); return p; }

    double as_real() const {
        if (type == Type::Real) return r;
        if (type == Type::Integer) return static_cast<double>(i);
        throw Error("parameter is not numeric");
    }
    int64_t as_int() const {
        if (type == Type::Integer) return i;
        if (type == Type::Real) return static_cast<int64_t>(r);
        throw Error("parameter is not an integer");
    }

    bool operator==(const ParamValue&) const = default;
};

struct ResolvedParam {
    std::string name;
    ParamValue value;

    bool operator==(const ResolvedParam&) const = default;
};

/// One selected variant with all of its parameters resolved.
struct ResolvedChoice {
    std::string op_id;
    std::string variant;
    int step_index = 0;
    StepPhase phase = StepPhase::Main;
    std::vector<ResolvedParam> params;

    const ParamValue* find(std::string_view name) const {
        for (const auto& p : params)
            if (p.name == name) return &p.value;
        return nullptr;
    }
    double real_or(std::string_view name, double fallback) const {
        const ParamValue* v = find(name);
        return v ? v->as_real() : fallback;
    }
    int64_t int_or(std::string_view name, int64_t fallback) const {
        const ParamValue* v = find(name);
        return v ? v->as_int() : fallback;
    }
    std::string text_or(std::string_view name, std::string fallback) const {
        const ParamValue* v = find(name);
        return v && v->type == ParamValue::Type::Text ? v->s : fallback;
    }

    bool operator==(const ResolvedChoice&) const = default;
};

struct PlanItem {
    TamperType type = TamperType::CopyMove;
    RegionAnnotation target;                     // rect whose pixels change
    std::optional<RegionAnnotation> copy_source; // copy-move: in-image source
    uint64_t splice_source_draw = 0;             // splicing: pool pick material
    uint64_t splice_region_draw = 0;
    std::string text;                            // insertion/replacement payload
    std::vector<ResolvedChoice> choices;         // main + post, table order

    const ResolvedChoice* find_choice(std::string_view op_id) const {
        for (const auto& c : choices)
            if (c.op_id == op_id) return &c;
        return nullptr;
    }
    const ResolvedChoice* find_variant(std::string_view variant) const {
        for (const auto& c : choices)
            if (c.variant == variant) return &c;
        return nullptr;
    }

    bool operator==(const PlanItem&) const = default;
};

struct TamperingPlan {
    std::string sample_id;
    std::vector<PlanItem> items;
    int region_count = 0;

    bool operator==(const TamperingPlan&) const = default;
};

/// Convenience wrapper for spec-mandated naming; see RngStream for the
/// documented mixing function.
inline RngStream derive_stream(uint64_t master_seed, std::string_view sample_id) {
    return RngStream::derive(master_seed, sample_id);
}

/// Samples one value for a ParamSpec. Integer and real ranges draw uniformly
/// (ends inclusive for integers), categorical draws uniformly over choices,
/// color ranges draw each channel independently, fixed specs return their
/// constant without consuming randomness.
inline ParamValue sample_parameter(const ParamSpec& spec, RngStream& rng) {
    switch (spec.kind) {
        case ParamKind::IntegerRange: {
            auto draw = [&] {
                return static_cast<int>(rng.uniform_int(static_cast<int64_t>(spec.min),
                                                        static_cast<int64_t>(spec.max)));
            };
            if (spec.count == 1) return ParamValue::integer(draw());
            std::vector<int> vals(spec.count);
            for (int& v : vals) v = draw();
            return ParamValue::ints(std::move(vals));
        }
        case ParamKind::RealRange:
            return ParamValue::real(rng.uniform_real(spec.min, spec.max));
        case ParamKind::Categorical: {
            auto idx = rng.uniform_int(0, static_cast<int64_t>(spec.choices.size()) - 1);
            return ParamValue::text(spec.choices[static_cast<size_t>(idx)]);
        }
        case ParamKind::ColorRange: {
            Rgb c;
            c.r = static_cast<uint8_t>(rng.uniform_int(spec.channel[0][0], spec.channel[0][1]));
            c.g = static_cast<uint8_t>(rng.uniform_int(spec.channel[1][0], spec.channel[1][1]));
            c.b = static_cast<uint8_t>(rng.uniform_int(spec.channel[2][0], spec.channel[2][1]));
            return ParamValue::rgb(c);
        }
        case ParamKind::Fixed:
            if (spec.fixed_is_number) {
                double v = spec.fixed_number;
                if (v == static_cast<int64_t>(v)) return ParamValue::integer(static_cast<int64_t>(v));
                return ParamValue::real(v);
            }
            return ParamValue::text(spec.fixed_text);
    }
    throw Error("unreachable param kind");
}

/// Draws one variant from an exclusive group: variant i with probability
/// frequency[i], none with probability residual_none.
inline const OperationVariant* select_exclusive_variant(const VariantGroup& group,
                                                        RngStream& rng) {
    double u = rng.uniform_real(0.0, 1.0);
    double acc = 0.0;
    for (const auto& v : group.variants) {
        acc += v.frequency;
        if (u < acc) return &v;
    }
    return nullptr;
}

namespace detail {

inline ResolvedChoice resolve_variant(const OperationVariant& v, const StepSpec& step,
                                      RngStream& rng) {
    ResolvedChoice c;
    c.op_id = v.op_id;
    c.variant = v.name;
    c.step_index = step.index;
    c.phase = step.phase;
    for (const auto& p : v.params) c.params.push_back({p.name, sample_parameter(p, rng)});
    return c;
}

}  // namespace detail

/// Post-processing selection: each group is included independently with
/// probability post_scale * (group frequency mass); within an included group
/// the variant is drawn with its frequency renormalized over the group mass.
/// Output preserves table step/group order.
inline std::vector<ResolvedChoice> select_postprocessing_subset(
    std::span<const StepSpec> steps, double post_scale, RngStream& rng) {
    if (!(post_scale > 0.0 && post_scale <= 1.0))
        throw Error("post_scale outside (0,1]");
    std::vector<ResolvedChoice> out;
    for (const auto& step : steps) {
        if (step.phase != StepPhase::Post) continue;
        for (const auto& group : step.groups) {
            double mass = group.frequency_mass();
            if (mass <= 0.0) continue;
            if (!rng.bernoulli(post_scale * mass)) continue;
            // renormalized exclusive choice within the group
            double u = rng.uniform_real(0.0, mass);
            double acc = 0.0;
            const OperationVariant* pick = &group.variants.back();
            for (const auto& v : group.variants) {
                acc += v.frequency;
                if (u < acc) {
                    pick = &v;
                    break;
                }
            }
            out.push_back(detail::resolve_variant(*pick, step, rng));
        }
    }
    return out;
}

namespace detail {

inline constexpr std::string_view kTextCharset =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

inline std::string sample_text(int length, RngStream& rng) {
    std::string s(static_cast<size_t>(length), ' ');
    for (char& c : s)
        c = kTextCharset[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(kTextCharset.size()) - 1))];
    return s;
}

/// The eight 3x3-grid neighbor offsets around a source rect, in a fixed
/// base order (row-major, center skipped).
inline std::vector<Rect> nine_grid_neighbors(const Rect& src) {
    std::vector<Rect> out;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            out.push_back({src.x + dx * src.w, src.y + dy * src.h, src.w, src.h});
        }
    return out;
}

inline bool overlaps_any(const Rect& r, const std::vector<Rect>& used) {
    for (const auto& u : used)
        if (r.intersects(u)) return true;
    return false;
}

}  // namespace detail

struct PlanContext {
    int image_width = 0;   // 0 disables bounds checks on 9-grid placement
    int image_height = 0;
};

/// Samples a concrete plan. Region count is uniform over
/// [1, min(12, available)]; each item draws its type from the model's
/// normalized weights and claims a compatible unused region (text regions
/// for copy-move/splicing/removal/replacement, non-text for insertion).
/// Items that cannot claim a disjoint region are dropped.
inline TamperingPlan sample_plan(const PopulationModel& model, const ParameterTable& table,
                                 std::span<const RegionAnnotation> regions, RngStream& rng,
                                 std::string sample_id = {}, PlanContext ctx = {}) {
    if (regions.empty()) throw Error("sample_plan: no region annotations");
    auto weights = model.normalized_weights();

    TamperingPlan plan;
    plan.sample_id = std::move(sample_id);

    int available = static_cast<int>(regions.size());
    int want = static_cast<int>(rng.uniform_int(1, std::min(12, available)));

    std::vector<size_t> text_pool, nontext_pool;
    for (size_t i = 0; i < regions.size(); ++i)
        (regions[i].kind == RegionKind::Text ? text_pool : nontext_pool).push_back(i);

    std::vector<char> used(regions.size(), 0);
    std::vector<Rect> used_rects;

    auto claim = [&](std::vector<size_t>& pool, const Rect* disjoint_from) -> int {
        // scan candidates in random order, first unused & disjoint wins
        std::vector<size_t> order = pool;
        rng.shuffle(order);
        for (size_t idx : order) {
            if (used[idx]) continue;
            if (detail::overlaps_any(regions[idx].rect, used_rects)) continue;
            if (disjoint_from && regions[idx].rect.intersects(*disjoint_from)) continue;
            used[idx] = 1;
            return static_cast<int>(idx);
        }
        return -1;
    };

    auto build_item = [&](TamperType type) -> std::optional<PlanItem> {
        PlanItem item;
        item.type = type;
        const TamperingTypeSpec& spec = table.spec_for(type);

        if (type == TamperType::Insertion) {
            int idx = claim(nontext_pool, nullptr);
            if (idx < 0) return std::nullopt;
            item.target = regions[static_cast<size_t>(idx)];
        } else if (type == TamperType::CopyMove) {
            int src = claim(text_pool, nullptr);
            if (src < 0) return std::nullopt;
            item.copy_source = regions[static_cast<size_t>(src)];
        } else {
            int idx = claim(text_pool, nullptr);
            if (idx < 0) return std::nullopt;
            item.target = regions[static_cast<size_t>(idx)];
        }

        // resolve main-processing groups in table order
        for (const auto& step : spec.steps) {
            if (step.phase != StepPhase::Main) continue;
            for (const auto& group : step.groups) {
                const OperationVariant* v = select_exclusive_variant(group, rng);
                if (!v) continue;
                item.choices.push_back(detail::resolve_variant(*v, step, rng));
            }
        }
        // then the post-processing subset
        auto post = select_postprocessing_subset(spec.steps, table.post_scale, rng);
        for (auto& c : post) item.choices.push_back(std::move(c));

        // copy-move paste placement per the 1.4 draw: an annotated text
        // region, or a 9-grid neighbor of the copied region
        if (type == TamperType::CopyMove) {
            const Rect src = item.copy_source->rect;
            std::string mode = "nearby-9-grid";
            if (const ResolvedChoice* c = item.find_choice("1.4"))
                mode = c->text_or("target-region", mode);
            bool placed = false;
            if (mode == "text-region") {
                int idx = claim(text_pool, &src);
                if (idx >= 0) {
                    item.target = regions[static_cast<size_t>(idx)];
                    placed = true;
                }
            }
            if (!placed) {
                auto cells = detail::nine_grid_neighbors(src);
                rng.shuffle(cells);
                for (const auto& cell : cells) {
                    Rect r = cell;
                    if (ctx.image_width > 0)
                        r = r.clipped(ctx.image_width, ctx.image_height);
                    if (r.w < src.w / 2 || r.h < src.h / 2 || r.empty()) continue;
                    if (detail::overlaps_any(r, used_rects) || r.intersects(src)) continue;
                    item.target.id = item.copy_source->id + "+grid";
                    item.target.rect = r;
                    item.target.kind = RegionKind::Text;
                    placed = true;
                    break;
                }
            }
            if (!placed && mode != "text-region") {
                int idx = claim(text_pool, &src);
                if (idx >= 0) {
                    item.target = regions[static_cast<size_t>(idx)];
                    placed = true;
                }
            }
            if (!placed) return std::nullopt;
        }

        if (type == TamperType::Splicing) {
            item.splice_source_draw = rng.next_u64();
            item.splice_region_draw = rng.next_u64();
        }
        if (type == TamperType::Insertion || type == TamperType::Replacement) {
            int len = 8;
            if (const ResolvedChoice* c = item.find_choice("1.2"))
                len = static_cast<int>(c->int_or("text-length", len));
            item.text = detail::sample_text(len, rng);
        }

        used_rects.push_back(item.target.rect);
        return item;
    };

    for (int i = 0; i < want; ++i) {
        TamperType type = kAllTamperTypes[static_cast<size_t>(
            rng.pick_weighted(std::span<const double>(weights.data(), weights.size())))];
        if (auto item = build_item(type)) plan.items.push_back(std::move(*item));
    }

    // Degenerate fallback: every draw failed to place. Restrict the type
    // draw to what the annotation pools can actually serve.
    if (plan.items.empty()) {
        bool have_text = false, have_nontext = false;
        for (const auto& r : regions) {
            if (r.kind == RegionKind::Text) have_text = true;
            else have_nontext = true;
        }
        std::array<double, kTamperTypeCount> restricted = weights;
        for (int t = 0; t < kTamperTypeCount; ++t) {
            bool needs_text = kAllTamperTypes[t] != TamperType::Insertion;
            if ((needs_text && !have_text) || (!needs_text && !have_nontext))
                restricted[t] = 0.0;
        }
        double sum = 0.0;
        for (double w : restricted) sum += w;
        if (sum > 0.0) {
            for (int attempt = 0; attempt < 16 && plan.items.empty(); ++attempt) {
                TamperType type = kAllTamperTypes[static_cast<size_t>(rng.pick_weighted(
                    std::span<const double>(restricted.data(), restricted.size())))];
                if (auto item = build_item(type)) plan.items.push_back(std::move(*item));
            }
        }
    }
    if (plan.items.empty()) throw Error("sample_plan: no placeable region for any item");

    plan.region_count = static_cast<int>(plan.items.size());
    return plan;
}

}  // namespace fsts
