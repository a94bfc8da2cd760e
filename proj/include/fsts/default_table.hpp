#pragma once

#include "fsts/param_table.hpp"

namespace fsts {

// Built-in default parameter table: the operation/parameter/frequency
// configuration for the five tampering types. The same content ships as
// data/fsts-default.table; a test keeps file and code in sync.
//
// Group layout notes:
//  - variants sharing an op_id are mutually exclusive alternatives,
//  - a group whose frequencies sum below 1 is skipped with the residual
//    probability,
//  - post-processing step frequencies are used as-is here; the sampler
//    applies the global post_scale (0.3) at draw time.

namespace table_builder {

inline ParamSpec int_range(std::string name, double lo, double hi,
                           ParamUnit unit = ParamUnit::None, int count = 1) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::IntegerRange;
    p.min = lo;
    p.max = hi;
    p.unit = unit;
    p.count = count;
    return p;
}

inline ParamSpec real_range(std::string name, double lo, double hi,
                            ParamUnit unit = ParamUnit::None) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::RealRange;
    p.min = lo;
    p.max = hi;
    p.unit = unit;
    return p;
}

inline ParamSpec categorical(std::string name, std::vector<std::string> choices) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::Categorical;
    p.choices = std::move(choices);
    return p;
}

inline ParamSpec color_range(std::string name, int lo, int hi) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::ColorRange;
    p.channel = {{{lo, hi}, {lo, hi}, {lo, hi}}};
    return p;
}

inline ParamSpec fixed_color(std::string name, int r, int g, int b) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::ColorRange;
    p.channel = {{{r, r}, {g, g}, {b, b}}};
    return p;
}

inline ParamSpec fixed_number(std::string name, double value,
                              ParamUnit unit = ParamUnit::None) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::Fixed;
    p.fixed_is_number = true;
    p.fixed_number = value;
    p.unit = unit;
    return p;
}

inline ParamSpec fixed_text(std::string name, std::string value) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = ParamKind::Fixed;
    p.fixed_text = std::move(value);
    return p;
}

inline OperationVariant variant(std::string op_id, std::string name, std::string label,
                                double frequency, std::vector<ParamSpec> params = {}) {
    OperationVariant v;
    v.op_id = std::move(op_id);
    v.name = std::move(name);
    v.label = std::move(label);
    v.frequency = frequency;
    v.params = std::move(params);
    return v;
}

inline VariantGroup group(std::vector<OperationVariant> variants) {
    VariantGroup g;
    g.op_id = variants.front().op_id;
    g.variants = std::move(variants);
    g.residual_none = std::max(0.0, 1.0 - g.frequency_mass());
    return g;
}

inline StepSpec step(int index, std::string name, StepPhase phase,
                     std::vector<VariantGroup> groups) {
    StepSpec s;
    s.index = index;
    s.name = std::move(name);
    s.phase = phase;
    s.groups = std::move(groups);
    return s;
}

}  // namespace table_builder

namespace detail {

// Shared variant factories for operations that several types configure
// identically (or nearly so).

inline OperationVariant magic_wand(double freq) {
    using namespace table_builder;
    return variant("2.1", "magic-wand", "Magic Wand Text Shape Extraction", freq,
                   {int_range("tolerance", 1, 50),
                    categorical("contiguous", {"yes", "no"}),
                    categorical("anti-alias", {"yes", "no"})});
}

inline OperationVariant channel_levels(double freq) {
    using namespace table_builder;
    // the level endpoints are the remap window itself, not a sampling range
    return variant("2.1", "channel-levels", "Channel Levels Text Shape Extraction", freq,
                   {categorical("channel", {"red"}),
                    fixed_number("input-lo", 130, ParamUnit::Levels),
                    fixed_number("input-hi", 237, ParamUnit::Levels),
                    fixed_number("output-lo", 0, ParamUnit::Levels),
                    fixed_number("output-hi", 255, ParamUnit::Levels)});
}

inline OperationVariant sharpen_small(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "sharpen", "Sharpen", freq,
                   {real_range("amount", 100, 200, ParamUnit::Percent),
                    real_range("radius", 1, 4, ParamUnit::Pixels),
                    int_range("threshold", 7, 12, ParamUnit::Levels)});
}

inline OperationVariant sharpen_strong(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "sharpen", "Sharpen", freq,
                   {int_range("iterations", 1, 5),
                    real_range("strength", 400, 500, ParamUnit::Percent),
                    real_range("radius", 50, 60, ParamUnit::Pixels),
                    int_range("threshold", 2, 3, ParamUnit::Levels)});
}

inline OperationVariant motion_blur(std::string op_id, double freq, double angle,
                                    double dist_hi) {
    using namespace table_builder;
    return variant(op_id, "motion-blur", "Motion Blur", freq,
                   {real_range("angle", -angle, angle, ParamUnit::Degrees),
                    int_range("distance", 1, dist_hi, ParamUnit::Pixels)});
}

inline OperationVariant radial_blur(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "radial-blur", "Radial Blur", freq,
                   {categorical("method", {"spin", "zoom"}),
                    categorical("quality", {"best", "draft", "good"})});
}

inline OperationVariant smart_blur(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "smart-blur", "Smart Blur", freq,
                   {real_range("radius", 0.1, 10, ParamUnit::Pixels),
                    real_range("threshold", 0.1, 10, ParamUnit::Levels),
                    categorical("quality", {"high", "medium", "low"}),
                    categorical("mode",
                                {"edge-preservation", "normal", "stroke-enhancement"})});
}

inline OperationVariant custom_convolution(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "custom-convolution", "Custom Convolution Filter", freq,
                   {int_range("kernel", -10, 10, ParamUnit::None, 25),
                    int_range("scale", 1, 20),
                    int_range("offset", -5, 5)});
}

inline OperationVariant stroke(std::string op_id, double freq, bool with_opacity) {
    using namespace table_builder;
    std::vector<ParamSpec> params = {int_range("size", 1, 5, ParamUnit::Pixels),
                                     categorical("position", {"inside", "center", "outside"}),
                                     categorical("blend-mode", {"normal", "multiply"})};
    if (with_opacity) params.push_back(real_range("opacity", 50, 100, ParamUnit::Percent));
    params.push_back(fixed_text("fill-type", "color"));
    params.push_back(color_range("color", 0, 255));
    return variant(op_id, "stroke", "Stroke", freq, std::move(params));
}

inline OperationVariant drop_shadow(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "drop-shadow", "Drop Shadow", freq,
                   {categorical("blend-mode", {"normal", "multiply", "darken"}),
                    color_range("color", 0, 255),
                    real_range("opacity", 5, 23, ParamUnit::Percent),
                    real_range("angle", -30, 30, ParamUnit::Degrees),
                    int_range("distance", 1, 7, ParamUnit::Pixels),
                    real_range("spread", 3, 12, ParamUnit::Percent),
                    int_range("size", 1, 17, ParamUnit::Pixels),
                    real_range("noise", 1, 10, ParamUnit::Percent)});
}

inline OperationVariant outer_glow(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "outer-glow", "Outer Glow Effect", freq,
                   {fixed_color("color", 83, 79, 79),
                    fixed_number("opacity", 17, ParamUnit::Percent),
                    real_range("noise", 35, 45, ParamUnit::Percent),
                    int_range("spread", 5, 8, ParamUnit::Pixels)});
}

inline OperationVariant additive_noise(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "noise", "Noise", freq,
                   {real_range("amount", 0.10, 35, ParamUnit::Percent),
                    categorical("distribution", {"gaussian", "uniform"}),
                    categorical("monochromatic", {"yes", "no"})});
}

inline OperationVariant font_properties(std::string op_id) {
    using namespace table_builder;
    return variant(op_id, "font-properties", "Font Properties", 1.0,
                   {categorical("font", {"times-new-roman", "simsun", "kaiti",
                                         "microsoft-yahei", "simhei"}),
                    categorical("anti-aliasing",
                                {"none", "sharp", "crisp", "smooth", "strong"})});
}

inline OperationVariant color_adaptation(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "color-adaptation", "Color Adaptation", freq,
                   {fixed_text("color-sampling", "original-text-color")});
}

inline OperationVariant safety_color(std::string op_id, double freq) {
    using namespace table_builder;
    return variant(op_id, "safety-color", "Safety Color Generation", freq,
                   {color_range("light-background", 0, 64),
                    color_range("dark-background", 192, 255)});
}

inline VariantGroup removal_group(double caf, double solid, double background,
                                  double clone, double healing) {
    using namespace table_builder;
    return group(
        {variant("2.1", "content-aware-fill", "Content-Aware Fill", caf,
                 {int_range("iterations", 1, 5)}),
         variant("2.1", "solid-color-fill", "Solid Color Fill", solid,
                 {color_range("color", 0, 255)}),
         variant("2.1", "background-clone", "Pure Background Cloning", background,
                 {fixed_text("blending-mode", "normal")}),
         variant("2.1", "clone-stamp", "Clone Stamp Tool", clone,
                 {fixed_text("mode", "normal"),
                  fixed_number("opacity", 100, ParamUnit::Percent),
                  fixed_number("flow", 100, ParamUnit::Percent)}),
         variant("2.1", "healing-brush", "Healing Brush Tool", healing,
                 {categorical("mode", {"normal", "replace"}),
                  fixed_text("source", "sampled")})});
}

inline TamperingTypeSpec copy_move_spec() {
    using namespace table_builder;
    TamperingTypeSpec ts;
    ts.type = TamperType::CopyMove;
    ts.steps = {
        step(1, "Region Sampling", StepPhase::Main,
             {group({variant("1.1", "text-region-selection", "Text Region Selection", 1.0,
                             {int_range("region-quantity", 1, 12, ParamUnit::Zones)})}),
              group({variant("1.2", "copy-within-image",
                             "Copy Region from Source Image (Within Image)", 1.0,
                             {categorical("text-region", {"random-text-region"})})}),
              group({variant("1.3", "source-text-length",
                             "Number of Characters Retained in Source Region", 1.0,
                             {int_range("text-length", 1, 20, ParamUnit::Characters)})}),
              group({variant("1.4", "paste-target-selection", "Paste Target Region Selection",
                             1.0,
                             {categorical("target-region",
                                          {"text-region", "nearby-9-grid"})})})}),
        step(2, "Geometric Transformation", StepPhase::Main,
             {group({magic_wand(0.1853), channel_levels(0.2374)}),
              group({variant("2.2", "region-scaling", "Region Scaling", 0.735,
                             {categorical("scaling-factor", {"adaptive-to-paste-region"})})}),
              group({variant("2.3", "region-rotation", "Region Rotation", 0.1333,
                             {real_range("angle", 0, 5, ParamUnit::Degrees)})})}),
        step(3, "Visual Trace Concealment", StepPhase::Post,
             {group({sharpen_small("3.1", 0.089)}),
              group({variant("3.2", "blur", "Blur Filter", 0.0571),
                     variant("3.2", "blur-more", "Blur More Filter", 0.0374),
                     variant("3.2", "mean-filter", "Mean Filter", 0.055),
                     variant("3.2", "gaussian-blur", "Gaussian Blur", 0.127,
                             {real_range("radius", 0.1, 3, ParamUnit::Pixels)}),
                     motion_blur("3.2", 0.071, 15, 9), radial_blur("3.2", 0.0309),
                     smart_blur("3.2", 0.0878), custom_convolution("3.2", 0.087)}),
              group({variant("3.3", "color-balance", "Color Balance", 0.0418,
                             {categorical("tonal-range", {"midtones"}),
                              int_range("cyan-red", -100, 100),
                              int_range("magenta-green", -100, 100),
                              int_range("yellow-blue", -100, 100)})}),
              group({variant("3.4", "color-curves", "Color Curves", 0.0853,
                             {categorical("curve",
                                          {"raise-highlights", "lower-shadows"})})})}),
    };
    return ts;
}

inline TamperingTypeSpec splicing_spec() {
    using namespace table_builder;
    TamperingTypeSpec ts;
    ts.type = TamperType::Splicing;
    ts.steps = {
        step(1, "Region Sampling", StepPhase::Main,
             {group({variant("1.1", "text-region-selection", "Text Region Selection", 1.0,
                             {int_range("region-quantity", 1, 12, ParamUnit::Zones)})}),
              group({variant("1.2", "copy-cross-image",
                             "Copy Region from Source Image (Cross-Image)", 1.0,
                             {categorical("text-region", {"random-text-region"})})}),
              group({variant("1.3", "source-text-length",
                             "Number of Characters Retained in Source Region", 1.0,
                             {int_range("text-length", 1, 20, ParamUnit::Characters)})}),
              group({variant("1.4", "paste-target-selection", "Paste Target Region Selection",
                             1.0,
                             {categorical("target-region", {"text-region"})})})}),
        step(2, "Geometric Transformation", StepPhase::Main,
             {group({magic_wand(0.1269), channel_levels(0.1794)}),
              group({variant("2.2", "region-scaling", "Region Scaling", 0.78,
                             {categorical("scaling-factor", {"adaptive-to-paste-region"})})}),
              group({variant("2.3", "region-rotation", "Region Rotation", 0.193,
                             {real_range("angle", 0, 5, ParamUnit::Degrees)})})}),
        step(3, "Visual Trace Concealment", StepPhase::Post,
             {group({sharpen_small("3.1", 0.1004)}),
              group({variant("3.2", "gaussian-blur", "Gaussian Blur", 0.187,
                             {real_range("radius", 0.1, 3, ParamUnit::Pixels)}),
                     variant("3.2", "lens-blur", "Lens Blur", 0.0703,
                             {fixed_text("depth-map", "none"),
                              fixed_text("invert", "disabled"),
                              categorical("aperture-shape",
                                          {"hexagon", "heptagon", "octagon", "pentagon",
                                           "quadrilateral", "triangle"}),
                              real_range("aperture-radius", 0, 1),
                              real_range("blade-curvature", 0, 1),
                              real_range("rotation", 0, 6, ParamUnit::Degrees),
                              fixed_number("brightness", 100, ParamUnit::Percent),
                              real_range("threshold", 0, 100, ParamUnit::Percent),
                              real_range("amount", 0, 25, ParamUnit::Percent),
                              categorical("distribution", {"gaussian", "uniform"})}),
                     motion_blur("3.2", 0.054, 15, 9), radial_blur("3.2", 0.0311),
                     smart_blur("3.2", 0.039), custom_convolution("3.2", 0.027)}),
              group({variant("3.3", "color-curves", "Color Curves", 0.1745,
                             {categorical("curve", {"raise-highlights", "lower-shadows"})})}),
              group({stroke("3.4", 0.0875, true)}),
              group({drop_shadow("3.5", 0.0699)}),
              group({variant("3.6", "hue-saturation", "Hue/Saturation", 0.1049,
                             {int_range("hue", -30, 30),
                              int_range("saturation", -20, 20),
                              int_range("lightness", -30, 30)})})}),
    };
    return ts;
}

inline TamperingTypeSpec removal_spec() {
    using namespace table_builder;
    TamperingTypeSpec ts;
    ts.type = TamperType::Removal;
    ts.steps = {
        step(1, "Region Sampling", StepPhase::Main,
             {group({variant("1.1", "text-region-selection", "Text Region Selection", 1.0,
                             {int_range("region-quantity", 1, 12, ParamUnit::Zones)})}),
              group({variant("1.2", "text-forgery-control", "Text Forgery Control", 1.0,
                             {int_range("text-length", 1, 20, ParamUnit::Characters)})})}),
        step(2, "Content Removal", StepPhase::Main,
             {removal_group(0.5582, 0.0976, 0.1152, 0.1045, 0.1245)}),
        step(3, "Geometric Transformation", StepPhase::Main,
             {group({variant("3.1", "region-scaling", "Region Scaling", 0.88,
                             {real_range("adaptive-jitter", -5, 5, ParamUnit::Percent)})}),
              group({variant("3.2", "region-rotation", "Region Rotation", 0.0068,
                             {real_range("angle", -5, 5, ParamUnit::Degrees)})})}),
    };
    return ts;
}

inline TamperingTypeSpec insertion_spec() {
    using namespace table_builder;
    TamperingTypeSpec ts;
    ts.type = TamperType::Insertion;
    ts.steps = {
        step(1, "Region Sampling", StepPhase::Main,
             {group({variant("1.1", "non-text-region-selection", "Non-text Region Selection",
                             1.0, {int_range("region-quantity", 1, 12, ParamUnit::Zones)})}),
              group({variant("1.2", "text-forgery-control", "Text Forgery Control", 1.0,
                             {int_range("text-length", 1, 20, ParamUnit::Characters)})})}),
        step(2, "Text Insertion", StepPhase::Main,
             {group({font_properties("2.1")}),
              group({color_adaptation("2.2", 0.869), safety_color("2.2", 0.131)})}),
        step(3, "Geometric Transformation", StepPhase::Main,
             {group({variant("3.1", "region-scaling", "Region Scaling", 0.77,
                             {real_range("adaptive-jitter", -5, 5, ParamUnit::Percent)})}),
              group({variant("3.2", "region-rotation", "Region Rotation", 0.1203,
                             {real_range("angle", -5, 5, ParamUnit::Degrees)})})}),
        step(4, "Visual Trace Concealment", StepPhase::Post,
             {group({sharpen_strong("4.1", 0.1273)}),
              group({variant("4.2", "gaussian-blur", "Gaussian Blur", 0.168,
                             {real_range("radius", 0.5, 1.2, ParamUnit::Pixels)})}),
              group({outer_glow("4.3", 0.0751)}),
              group({additive_noise("4.4", 0.1654)}),
              group({stroke("4.5", 0.1533, false)}),
              group({drop_shadow("4.6", 0.0526)})}),
    };
    return ts;
}

inline TamperingTypeSpec replacement_spec() {
    using namespace table_builder;
    TamperingTypeSpec ts;
    ts.type = TamperType::Replacement;
    ts.steps = {
        step(1, "Region Sampling", StepPhase::Main,
             {group({variant("1.1", "text-region-selection", "Text Region Selection", 1.0,
                             {int_range("region-quantity", 1, 12, ParamUnit::Zones)})}),
              group({variant("1.2", "text-forgery-control", "Text Forgery Control", 1.0,
                             {int_range("text-length", 1, 20, ParamUnit::Characters)})})}),
        step(2, "Content Removal", StepPhase::Main,
             {removal_group(0.617, 0.096, 0.095, 0.104, 0.088)}),
        // Color adaptation and safety color carry distinct op ids here
        // (3.3 / 3.4), unlike Insertion where both share 2.2: they are
        // independent singleton groups. The executor prefers adaptation
        // when both or neither resolve.
        step(3, "Text Insertion", StepPhase::Main,
             {group({font_properties("3.1")}),
              group({color_adaptation("3.3", 0.884)}),
              group({safety_color("3.4", 0.116)})}),
        step(4, "Geometric Transformation", StepPhase::Main,
             {group({variant("4.1", "region-scaling", "Region Scaling", 0.435,
                             {real_range("adaptive-jitter", -5, 5, ParamUnit::Percent)}),
                     variant("4.1", "region-rotation", "Region Rotation", 0.3333,
                             {real_range("angle", -5, 5, ParamUnit::Degrees)})})}),
        step(5, "Visual Trace Concealment", StepPhase::Post,
             {group({sharpen_strong("5.1", 0.1269)}),
              group({variant("5.2", "gaussian-blur", "Gaussian Blur", 0.1191,
                             {real_range("radius", 0.5, 1.2, ParamUnit::Pixels)}),
                     variant("5.2", "surface-blur", "Surface Blur", 0.076,
                             {int_range("radius", 1, 15, ParamUnit::Pixels),
                              int_range("threshold", 5, 25, ParamUnit::Levels)}),
                     motion_blur("5.2", 0.0763, 30, 20)}),
              group({outer_glow("5.3", 0.1368)}),
              group({additive_noise("5.4", 0.1047)}),
              group({stroke("5.5", 0.102, true)}),
              group({drop_shadow("5.6", 0.0881)})}),
    };
    return ts;
}

}  // namespace detail

inline ParameterTable default_parameter_table() {
    ParameterTable t;
    t.types[0] = detail::copy_move_spec();
    t.types[1] = detail::splicing_spec();
    t.types[2] = detail::removal_spec();
    t.types[3] = detail::insertion_spec();
    t.types[4] = detail::replacement_spec();
    t.type_weights = {0.2, 0.2, 0.2, 0.2, 0.2};
    t.post_scale = 0.3;
    return t;
}

}  // namespace fsts
