#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fsts/edit_log.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Hierarchical model fitting. An IndividualModel summarizes one tamperer's
// logs: per-type usage weights plus, per variant group, the representative
// (most frequent) variant among those clearing the usage threshold. A
// PopulationModel aggregates individuals: weights are summed and normalized,
// and a configuration is retained only when the share of individuals whose
// representative matches it clears the population threshold.

struct ParamStats {
    double min = 0.0, max = 0.0;  // numeric observations only
    std::string mode;             // most frequent raw value (ties: smallest)
    size_t count = 0;
    bool numeric = false;

    bool operator==(const ParamStats&) const = default;
};

/// Representative variant for one group, with its empirical share.
struct RepresentativeChoice {
    std::string op_id;
    std::string variant;
    double share = 0.0;
    std::map<std::string, ParamStats> params;
    // Optional sampling-range override; fitting never writes these, but a
    // model file may carry them to supersede the table's declared range.
    std::map<std::string, std::pair<double, double>> range_overrides;

    bool operator==(const RepresentativeChoice&) const = default;
};

struct RepresentativeConfig {
    std::vector<RepresentativeChoice> choices;  // ordered by op_id

    const RepresentativeChoice* find(std::string_view op_id) const {
        for (const auto& c : choices)
            if (c.op_id == op_id) return &c;
        return nullptr;
    }

    bool operator==(const RepresentativeConfig&) const = default;
};

struct IndividualModel {
    std::string tamperer_id;
    std::array<double, kTamperTypeCount> type_weights = {};
    std::array<RepresentativeConfig, kTamperTypeCount> representatives;
    size_t sample_count = 0;
};

struct PopulationModel {
    std::array<double, kTamperTypeCount> type_weights = {};
    std::array<RepresentativeConfig, kTamperTypeCount> representatives;
    size_t individuals = 0;
    size_t samples = 0;

    std::array<double, kTamperTypeCount> normalized_weights() const {
        double sum = 0.0;
        for (double w : type_weights) sum += w;
        if (sum <= 0.0) throw Error("model type weights sum to zero");
        auto out = type_weights;
        for (double& w : out) w /= sum;
        return out;
    }
};

/// Uniform-weight model with no representative overrides; the sampler then
/// draws everything from the table.
inline PopulationModel uniform_population_model() {
    PopulationModel m;
    m.type_weights = {0.2, 0.2, 0.2, 0.2, 0.2};
    m.individuals = 0;
    m.samples = 0;
    return m;
}

namespace detail {

inline bool parse_number(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

inline ParamStats collect_stats(std::vector<std::string> values) {
    ParamStats st;
    st.count = values.size();
    st.numeric = !values.empty();
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& v : values) {
        double x;
        if (!parse_number(v, x)) {
            st.numeric = false;
            break;
        }
        if (first || x < lo) lo = x;
        if (first || x > hi) hi = x;
        first = false;
    }
    if (st.numeric) {
        st.min = lo;
        st.max = hi;
    }
    // mode with deterministic tie-break: numeric compare when possible,
    // else lexicographic
    std::map<std::string, size_t> freq;
    for (const auto& v : values) ++freq[v];
    size_t best = 0;
    std::string mode;
    for (const auto& [value, n] : freq) {
        bool better = n > best;
        if (n == best && !mode.empty()) {
            double a, b;
            if (st.numeric && parse_number(value, a) && parse_number(mode, b))
                better = a < b;
            else
                better = value < mode;
        }
        if (better) {
            best = n;
            mode = value;
        }
    }
    st.mode = mode;
    return st;
}

}  // namespace detail

/// Fits one tamperer's model. All records must share a tamperer_id; the
/// threshold is the minimum within-type usage share a variant needs to be a
/// representative candidate (inclusive).
inline IndividualModel fit_individual(std::span<const EditLogRecord> logs, double threshold) {
    if (logs.empty()) throw Error("fit_individual: empty logs");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw Error("fit_individual: threshold outside (0,1)");
    IndividualModel model;
    model.tamperer_id = logs.front().tamperer_id;
    for (const auto& r : logs)
        if (r.tamperer_id != model.tamperer_id)
            throw Error("fit_individual: records from multiple tamperers (" +
                        model.tamperer_id + ", " + r.tamperer_id + ")");

    // samples per type; a sample may contribute several records
    std::array<std::set<std::string>, kTamperTypeCount> samples_by_type;
    std::set<std::string> all_samples;
    for (const auto& r : logs) {
        samples_by_type[static_cast<int>(r.type)].insert(r.sample_id);
        all_samples.insert(r.sample_id);
    }
    model.sample_count = all_samples.size();
    for (int t = 0; t < kTamperTypeCount; ++t)
        model.type_weights[t] = static_cast<double>(samples_by_type[t].size()) /
                                static_cast<double>(all_samples.size());

    for (int t = 0; t < kTamperTypeCount; ++t) {
        size_t n_samples = samples_by_type[t].size();
        if (n_samples == 0) continue;
        // distinct samples using (group, variant)
        std::map<std::string, std::map<std::string, std::set<std::string>>> usage;
        std::map<std::pair<std::string, std::string>,
                 std::map<std::string, std::vector<std::string>>>
            param_values;
        for (const auto& r : logs) {
            if (static_cast<int>(r.type) != t) continue;
            usage[r.op_id][r.variant].insert(r.sample_id);
            auto& pv = param_values[{r.op_id, r.variant}];
            for (const auto& [k, v] : r.params) pv[k].push_back(v);
        }
        RepresentativeConfig cfg;
        for (const auto& [op_id, variants] : usage) {
            std::string best_variant;
            double best_share = 0.0;
            for (const auto& [variant, samples] : variants) {
                double share = static_cast<double>(samples.size()) /
                               static_cast<double>(n_samples);
                if (share + 1e-12 < threshold) continue;  // inclusive >=
                if (share > best_share ||
                    (share == best_share && (best_variant.empty() || variant < best_variant))) {
                    best_share = share;
                    best_variant = variant;
                }
            }
            if (best_variant.empty()) continue;
            RepresentativeChoice choice;
            choice.op_id = op_id;
            choice.variant = best_variant;
            choice.share = best_share;
            for (auto& [name, values] : param_values[{op_id, best_variant}])
                choice.params[name] = detail::collect_stats(values);
            cfg.choices.push_back(std::move(choice));
        }
        model.representatives[t] = std::move(cfg);
    }
    return model;
}

/// Aggregates individuals into the population model. The threshold is the
/// minimum share of individuals (over all aggregated individuals, inclusive)
/// whose representative for a group must match for the configuration to be
/// retained; the most widely shared configuration wins.
inline PopulationModel aggregate_population(std::span<const IndividualModel> models,
                                            double threshold) {
    if (models.empty()) throw Error("aggregate_population: no individual models");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw Error("aggregate_population: threshold outside (0,1)");

    PopulationModel pop;
    pop.individuals = models.size();
    for (const auto& m : models) pop.samples += m.sample_count;

    double total = 0.0;
    for (const auto& m : models)
        for (int t = 0; t < kTamperTypeCount; ++t) {
            pop.type_weights[t] += m.type_weights[t];
            total += m.type_weights[t];
        }
    if (total <= 0.0) throw Error("aggregate_population: zero aggregate weight");
    for (double& w : pop.type_weights) w /= total;

    double n = static_cast<double>(models.size());
    for (int t = 0; t < kTamperTypeCount; ++t) {
        // individuals backing each (group, variant)
        std::map<std::string, std::map<std::string, std::vector<const RepresentativeChoice*>>>
            backing;
        for (const auto& m : models)
            for (const auto& c : m.representatives[t].choices)
                backing[c.op_id][c.variant].push_back(&c);

        RepresentativeConfig cfg;
        for (const auto& [op_id, variants] : backing) {
            std::string best_variant;
            size_t best_count = 0;
            for (const auto& [variant, holders] : variants) {
                double share = static_cast<double>(holders.size()) / n;
                if (share + 1e-12 < threshold) continue;
                if (holders.size() > best_count ||
                    (holders.size() == best_count &&
                     (best_variant.empty() || variant < best_variant))) {
                    best_count = holders.size();
                    best_variant = variant;
                }
            }
            if (best_variant.empty()) continue;
            RepresentativeChoice choice;
            choice.op_id = op_id;
            choice.variant = best_variant;
            choice.share = static_cast<double>(best_count) / n;
            // merge parameter statistics across holders
            std::map<std::string, std::vector<const ParamStats*>> merged;
            for (const auto* holder : variants.at(best_variant))
                for (const auto& [name, st] : holder->params) merged[name].push_back(&st);
            for (const auto& [name, stats] : merged) {
                ParamStats out;
                out.numeric = true;
                std::map<std::string, size_t> modes;
                for (const auto* st : stats) {
                    out.count += st->count;
                    out.numeric = out.numeric && st->numeric;
                    ++modes[st->mode];
                }
                bool first = true;
                for (const auto* st : stats) {
                    if (!st->numeric) continue;
                    if (first || st->min < out.min) out.min = st->min;
                    if (first || st->max > out.max) out.max = st->max;
                    first = false;
                }
                size_t best = 0;
                for (const auto& [value, cnt] : modes)
                    if (cnt > best || (cnt == best && value < out.mode)) {
                        best = cnt;
                        out.mode = value;
                    }
                choice.params[name] = out;
            }
            cfg.choices.push_back(std::move(choice));
        }
        pop.representatives[t] = std::move(cfg);
    }
    return pop;
}

/// Total variation distance between normalized coefficient vectors:
/// 0.5 * sum |a_i/sum(a) - b_i/sum(b)|. Always in [0,1].
inline double coefficient_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error("coefficient_distance: length mismatch");
    if (a.empty()) throw Error("coefficient_distance: empty vectors");
    double sa = 0.0, sb = 0.0;
    for (double x : a) {
        if (x < 0.0) throw Error("coefficient_distance: negative entry");
        sa += x;
    }
    for (double x : b) {
        if (x < 0.0) throw Error("coefficient_distance: negative entry");
        sb += x;
    }
    if (sa <= 0.0 || sb <= 0.0) throw Error("coefficient_distance: all-zero vector");
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] / sa - b[i] / sb);
    return 0.5 * d;
}

// ---------------------------------------------------------------------------
// Model file format: versioned, line-oriented text. Example:
//
//   format_version: 1
//   kind: population
//   individuals: 20
//   samples: 1000
//   weight copy-move: 0.21
//   ...
//   representative removal 2.1: content-aware-fill share=0.85
//   param removal 2.1 iterations: min=1 max=5 mode=3 count=420 numeric=1
//   override removal 2.1 iterations: 2 4        (optional range override)
// ---------------------------------------------------------------------------

inline std::string serialize_model(const PopulationModel& m) {
    std::ostringstream out;
    out.precision(17);
    out << "format_version: 1\n";
    out << "kind: population\n";
    out << "individuals: " << m.individuals << "\n";
    out << "samples: " << m.samples << "\n";
    for (int t = 0; t < kTamperTypeCount; ++t)
        out << "weight " << to_string(kAllTamperTypes[t]) << ": " << m.type_weights[t]
            << "\n";
    for (int t = 0; t < kTamperTypeCount; ++t) {
        std::string type(to_string(kAllTamperTypes[t]));
        for (const auto& c : m.representatives[t].choices) {
            out << "representative " << type << " " << c.op_id << ": " << c.variant
                << " share=" << c.share << "\n";
            for (const auto& [name, st] : c.params) {
                out << "param " << type << " " << c.op_id << " " << name << ": ";
                if (st.numeric) out << "min=" << st.min << " max=" << st.max << " ";
                out << "mode=" << st.mode << " count=" << st.count
                    << " numeric=" << (st.numeric ? 1 : 0) << "\n";
            }
            for (const auto& [name, range] : c.range_overrides)
                out << "override " << type << " " << c.op_id << " " << name << ": "
                    << range.first << " " << range.second << "\n";
        }
    }
    return out.str();
}

inline PopulationModel parse_model(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    PopulationModel m;
    bool saw_version = false;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("model line " + std::to_string(line_no) + ": " + what);
    };
    auto find_choice = [&](TamperType t, const std::string& op_id) -> RepresentativeChoice* {
        for (auto& c : m.representatives[static_cast<int>(t)].choices)
            if (c.op_id == op_id) return &c;
        return nullptr;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw fail("missing ':'");
        std::string head = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);
        while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());

        std::istringstream hs(head);
        std::string kw;
        hs >> kw;
        if (kw == "format_version") {
            if (rest != "1") throw fail("unsupported format_version " + rest);
            saw_version = true;
        } else if (kw == "kind") {
            if (rest != "population") throw fail("unsupported model kind " + rest);
        } else if (kw == "individuals") {
            m.individuals = std::stoull(rest);
        } else if (kw == "samples") {
            m.samples = std::stoull(rest);
        } else if (kw == "weight") {
            std::string type;
            hs >> type;
            m.type_weights[static_cast<int>(tamper_type_from_string(type))] =
                std::stod(rest);
        } else if (kw == "representative") {
            std::string type, op_id;
            hs >> type >> op_id;
            std::istringstream rs(rest);
            RepresentativeChoice c;
            c.op_id = op_id;
            rs >> c.variant;
            std::string share;
            rs >> share;
            if (share.rfind("share=", 0) == 0) c.share = std::stod(share.substr(6));
            m.representatives[static_cast<int>(tamper_type_from_string(type))]
                .choices.push_back(std::move(c));
        } else if (kw == "param") {
            std::string type, op_id, name;
            hs >> type >> op_id >> name;
            auto* c = find_choice(tamper_type_from_string(type), op_id);
            if (!c) throw fail("param before its representative line");
            ParamStats st;
            std::istringstream rs(rest);
            std::string tok;
            while (rs >> tok) {
                if (tok.rfind("min=", 0) == 0) st.min = std::stod(tok.substr(4));
                else if (tok.rfind("max=", 0) == 0) st.max = std::stod(tok.substr(4));
                else if (tok.rfind("mode=", 0) == 0) st.mode = tok.substr(5);
                else if (tok.rfind("count=", 0) == 0) st.count = std::stoull(tok.substr(6));
                else if (tok.rfind("numeric=", 0) == 0) st.numeric = tok.substr(8) == "1";
                else throw fail("unknown param token " + tok);
            }
            c->params[name] = st;
        } else if (kw == "override") {
            std::string type, op_id, name;
            hs >> type >> op_id >> name;
            auto* c = find_choice(tamper_type_from_string(type), op_id);
            if (!c) throw fail("override before its representative line");
            std::istringstream rs(rest);
            double lo, hi;
            if (!(rs >> lo >> hi)) throw fail("override needs two numbers");
            c->range_overrides[name] = {lo, hi};
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_version) throw ParseError("model file missing format_version header");
    return m;
}

}  // namespace fsts
