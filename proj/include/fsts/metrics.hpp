#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsts/image.hpp"
#include "fsts/param_table.hpp"
#include "fsts/record.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Pixel-level mask metrics and the operation-frequency report.

/// F1 = 2TP / (2TP + FP + FN) over pixels. Two empty masks score 1.0 - the
/// degenerate convention for authentic images with empty ground truth.
inline double pixel_f1(const PixelMask& pred, const PixelMask& gt) {
    if (pred.width() != gt.width() || pred.height() != gt.height())
        throw Error("pixel_f1: dimension mismatch");
    size_t tp = 0, fp = 0, fn = 0;
    for (int y = 0; y < gt.height(); ++y)
        for (int x = 0; x < gt.width(); ++x) {
            bool p = pred.get(x, y), g = gt.get(x, y);
            tp += p && g;
            fp += p && !g;
            fn += !p && g;
        }
    if (tp + fp + fn == 0) return 1.0;
    return 2.0 * tp / (2.0 * tp + fp + fn);
}

/// ROC AUC via the Mann-Whitney rank statistic with ties averaged. The
/// ground truth must contain both classes.
inline double pixel_auc(std::span<const double> scores, const PixelMask& gt) {
    if (scores.size() != static_cast<size_t>(gt.width()) * gt.height())
        throw Error("pixel_auc: score/mask dimension mismatch");
    size_t npos = gt.count();
    size_t nneg = scores.size() - npos;
    if (npos == 0 || nneg == 0)
        throw Error("pixel_auc: ground truth contains a single class");

    std::vector<size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] < scores[b]; });

    double rank_sum_pos = 0.0;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        double avg_rank = (i + j) / 2.0 + 1.0;  // 1-based, ties share their mean rank
        for (size_t k = i; k <= j; ++k) {
            size_t idx = order[k];
            if (gt.get(static_cast<int>(idx % gt.width()),
                       static_cast<int>(idx / gt.width())))
                rank_sum_pos += avg_rank;
        }
        i = j + 1;
    }
    double u = rank_sum_pos - npos * (npos + 1.0) / 2.0;
    return u / (static_cast<double>(npos) * nneg);
}

// ------------------------------------------------------- chi-square p-value

namespace detail {

inline double log_gamma(double x) { return std::lgamma(x); }

/// Regularized lower incomplete gamma P(a, x) by series / continued fraction.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw Error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        // series expansion
        double ap = a, sum = 1.0 / a, del = sum;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    // continued fraction for Q, then P = 1 - Q
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int n = 1; n < 500; ++n) {
        double an = -n * (n - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    double q = std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
    return 1.0 - q;
}

}  // namespace detail

/// Upper-tail p-value of a chi-square statistic with `dof` degrees of freedom.
inline double chi_square_p_value(double statistic, int dof) {
    if (dof < 1) throw Error("chi_square_p_value: dof must be >= 1");
    if (statistic <= 0.0) return 1.0;
    return 1.0 - detail::gamma_p(dof / 2.0, statistic / 2.0);
}

/// Pearson goodness-of-fit against expected probabilities. Zero-probability
/// cells must carry zero counts.
inline double chi_square_statistic(std::span<const size_t> counts,
                                   std::span<const double> probabilities) {
    if (counts.size() != probabilities.size())
        throw Error("chi_square_statistic: size mismatch");
    size_t total = 0;
    for (size_t c : counts) total += c;
    double stat = 0.0;
    for (size_t i = 0; i < counts.size(); ++i) {
        double expected = probabilities[i] * total;
        if (expected <= 0.0) {
            if (counts[i] != 0) throw Error("chi_square_statistic: count in zero cell");
            continue;
        }
        double d = counts[i] - expected;
        stat += d * d / expected;
    }
    return stat;
}

// ---------------------------------------------------------- frequency report

struct GroupFrequencyRow {
    TamperType type;
    std::string op_id;
    std::string variant;  // "(none)" for the residual slot
    std::string label;
    double configured = 0.0;  // effective probability (post groups scaled)
    double empirical = 0.0;
    double ci_halfwidth = 0.0;  // normal-approximation 95% interval
    size_t count = 0;
};

struct GroupTestRow {
    TamperType type;
    std::string op_id;
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    size_t samples = 0;
};

struct MetricsReport {
    std::vector<GroupFrequencyRow> rows;
    std::vector<GroupTestRow> tests;
    std::array<size_t, kTamperTypeCount> items_per_type = {};
};

/// Empirical per-group variant frequencies over recorded plan items,
/// juxtaposed with the configured values, plus a chi-square test per group
/// (skipped when fewer than two samples land in a group's type).
inline MetricsReport frequency_report(std::span<const SampleRecord> records,
                                      const ParameterTable& table) {
    if (records.empty()) throw Error("frequency_report: no records");
    MetricsReport report;

    // usage[(type, op_id)][variant] = items using it
    std::map<std::pair<int, std::string>, std::map<std::string, size_t>> usage;
    for (const auto& r : records)
        for (const auto& item : r.items) {
            ++report.items_per_type[static_cast<int>(item.type)];
            for (const auto& c : item.choices)
                ++usage[{static_cast<int>(item.type), c.op_id}][c.variant];
        }

    for (int t = 0; t < kTamperTypeCount; ++t) {
        const auto& spec = table.types[t];
        size_t n = report.items_per_type[t];
        for (const auto& step : spec.steps)
            for (const auto& group : step.groups) {
                double scale = step.phase == StepPhase::Post ? table.post_scale : 1.0;
                auto& used = usage[{t, group.op_id}];
                std::vector<size_t> counts;
                std::vector<double> probs;
                size_t used_total = 0;
                for (const auto& v : group.variants) {
                    GroupFrequencyRow row;
                    row.type = kAllTamperTypes[t];
                    row.op_id = group.op_id;
                    row.variant = v.name;
                    row.label = v.label;
                    row.configured = v.frequency * scale;
                    row.count = used.count(v.name) ? used.at(v.name) : 0;
                    used_total += row.count;
                    row.empirical = n ? static_cast<double>(row.count) / n : 0.0;
                    if (n > 1)
                        row.ci_halfwidth =
                            1.96 * std::sqrt(std::max(0.0, row.empirical *
                                                               (1.0 - row.empirical) / n));
                    report.rows.push_back(row);
                    counts.push_back(row.count);
                    probs.push_back(row.configured);
                }
                // residual slot: group skipped
                GroupFrequencyRow none;
                none.type = kAllTamperTypes[t];
                none.op_id = group.op_id;
                none.variant = "(none)";
                none.label = "(none)";
                none.configured = 1.0 - group.frequency_mass() * scale;
                none.count = n - std::min(n, used_total);
                none.empirical = n ? static_cast<double>(none.count) / n : 0.0;
                if (n > 1)
                    none.ci_halfwidth = 1.96 * std::sqrt(std::max(
                                                   0.0, none.empirical *
                                                            (1.0 - none.empirical) / n));
                report.rows.push_back(none);
                counts.push_back(none.count);
                probs.push_back(none.configured);

                if (n > 1) {
                    GroupTestRow test;
                    test.type = kAllTamperTypes[t];
                    test.op_id = group.op_id;
                    int cells = 0;
                    for (double p : probs) cells += p > 0.0;
                    test.dof = std::max(1, cells - 1);
                    test.statistic = chi_square_statistic(counts, probs);
                    test.p_value = chi_square_p_value(test.statistic, test.dof);
                    test.samples = n;
                    report.tests.push_back(test);
                }
            }
    }
    return report;
}

/// Top operations of one type by share of items using them (the bar-chart
/// view; shares do not sum to 1 because one item uses several operations).
struct OperationShare {
    std::string variant;
    std::string label;
    double share = 0.0;
    size_t count = 0;
};

inline std::vector<OperationShare> top_operations(std::span<const SampleRecord> records,
                                                  const ParameterTable& table,
                                                  TamperType type, size_t top_n = 8) {
    std::map<std::string, size_t> counts;
    size_t items = 0;
    for (const auto& r : records)
        for (const auto& item : r.items) {
            if (item.type != type) continue;
            ++items;
            for (const auto& c : item.choices) ++counts[c.variant];
        }
    std::vector<OperationShare> out;
    for (const auto& [variant, count] : counts) {
        OperationShare s;
        s.variant = variant;
        s.count = count;
        s.share = items ? static_cast<double>(count) / items : 0.0;
        s.label = variant;
        for (const auto& step : table.spec_for(type).steps)
            for (const auto& g : step.groups)
                if (const auto* v = g.find(variant)) s.label = v->label;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const OperationShare& a, const OperationShare& b) {
        if (a.share != b.share) return a.share > b.share;
        return a.variant < b.variant;
    });
    if (out.size() > top_n) out.resize(top_n);
    return out;
}

}  // namespace fsts
