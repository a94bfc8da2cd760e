#pragma once

// Shared test utilities: crafted edit-log synthesis and scratch directories.

#include <filesystem>
#include <string>
#include <vector>

#include "fsts/default_table.hpp"
#include "fsts/edit_log.hpp"
#include "fsts/rng.hpp"
#include "fsts/sampler.hpp"

namespace testutil {

/// Synthesizes edit logs for one tamperer by drawing from a known ground
/// truth: types from `type_weights`, then per main-processing group a
/// variant per its table frequency. Returns one record per chosen variant.
inline std::vector<fsts::EditLogRecord> synth_individual_logs(
    const std::string& tamperer_id, const fsts::ParameterTable& table,
    const std::array<double, fsts::kTamperTypeCount>& type_weights, int samples,
    fsts::RngStream& rng) {
    std::vector<fsts::EditLogRecord> out;
    for (int j = 0; j < samples; ++j) {
        std::string sample_id = tamperer_id + "-" + std::to_string(j);
        fsts::TamperType type = fsts::kAllTamperTypes[static_cast<size_t>(rng.pick_weighted(
            std::span<const double>(type_weights.data(), type_weights.size())))];
        const auto& spec = table.spec_for(type);
        bool emitted = false;
        for (const auto& step : spec.steps) {
            if (step.phase != fsts::StepPhase::Main) continue;
            for (const auto& group : step.groups) {
                const auto* v = fsts::select_exclusive_variant(group, rng);
                if (!v) continue;
                fsts::EditLogRecord r;
                r.tamperer_id = tamperer_id;
                r.sample_id = sample_id;
                r.type = type;
                r.op_id = group.op_id;
                r.variant = v->name;
                out.push_back(std::move(r));
                emitted = true;
            }
        }
        if (!emitted) {
            // every sample must appear at least once so type weights count it
            fsts::EditLogRecord r;
            r.tamperer_id = tamperer_id;
            r.sample_id = sample_id;
            r.type = type;
            r.op_id = "1.1";
            r.variant = "text-region-selection";
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Fresh scratch directory under the build tree's temp space.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("fsts-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testutil
