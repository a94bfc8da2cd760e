// Command-line front end: fit, synth, validate, report, and replay
// workflows over the library. Exit codes: 0 success, 1 validation or
// invariant failure, 2 usage/input error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsts/dataset.hpp"
#include "fsts/default_table.hpp"
#include "fsts/fitting.hpp"
#include "fsts/metrics.hpp"
#include "fsts/pipeline.hpp"

namespace fs = std::filesystem;
using namespace fsts;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct LoadedSource {
    std::string id;
    ImageBuffer image;
    std::vector<RegionAnnotation> annotations;
    bool has_annotation_file = false;
};

ParameterTable load_table_arg(const std::string& table_path) {
    if (table_path.empty()) return default_parameter_table();
    return load_parameter_table(read_text_file(table_path));
}

PopulationModel load_model_arg(const std::string& model_path) {
    if (model_path.empty()) return uniform_population_model();
    return parse_model(read_text_file(model_path));
}

const FontLibrary& font_library(const std::string& font_dir_flag) {
    static FontLibrary custom;
    std::string dir = font_dir_flag;
    if (dir.empty())
        if (const char* env = std::getenv("FSTS_FONT_DIR")) dir = env;
    if (dir.empty()) return FontLibrary::builtin();
    custom = FontLibrary::with_directory(dir);
    return custom;
}

/// Loads every PNG under `sources`, pairing <stem>.json annotations from
/// `annotations_dir` (or alongside the image when unset).
std::vector<LoadedSource> load_sources(const std::string& sources_dir,
                                       const std::string& annotations_dir) {
    if (!fs::is_directory(sources_dir))
        throw IoError("sources directory not found: " + sources_dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(sources_dir))
        if (e.is_regular_file() && e.path().extension() == ".png")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<LoadedSource> out;
    for (const auto& p : files) {
        LoadedSource src;
        src.id = p.stem().string();
        src.image = read_png_rgb(p.string());
        fs::path ann = annotations_dir.empty()
                           ? p.parent_path() / (src.id + ".json")
                           : fs::path(annotations_dir) / (src.id + ".json");
        if (fs::exists(ann)) {
            src.annotations =
                load_annotations(ann.string(), src.image.width(), src.image.height());
            src.has_annotation_file = true;
        }
        out.push_back(std::move(src));
    }
    return out;
}

std::vector<SourceEntry> pool_view(const std::vector<LoadedSource>& sources) {
    std::vector<SourceEntry> pool;
    for (const auto& s : sources) pool.push_back({s.id, &s.image, &s.annotations});
    return pool;
}

std::string sample_name(size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06zu", index + 1);
    return std::string("sample-") + buf;
}

// ------------------------------------------------------------------- fit

int cmd_fit(const std::string& logs_dir, double individual_threshold,
            double population_threshold, const std::string& out_path,
            const std::string& reference_path) {
    EditLogCorpus corpus;
    try {
        corpus = load_edit_logs(logs_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (corpus.by_tamperer.empty()) {
        std::cerr << "error: no edit logs found in " << logs_dir << "\n";
        return kExitUsage;
    }
    std::cout << "fit: individual-threshold=" << individual_threshold
              << " population-threshold=" << population_threshold << "\n";
    std::cout << "tamperers: " << corpus.by_tamperer.size() << ", records: " << corpus.records;
    if (corpus.duplicates)
        std::cout << " (" << corpus.duplicates << " duplicate lines dropped)";
    std::cout << "\n";

    std::vector<IndividualModel> individuals;
    try {
        for (const auto& [id, records] : corpus.by_tamperer)
            individuals.push_back(fit_individual(records, individual_threshold));
        PopulationModel pop = aggregate_population(individuals, population_threshold);

        std::cout << "type weights (a_k):\n";
        for (int t = 0; t < kTamperTypeCount; ++t)
            std::cout << "  " << std::left << std::setw(12) << to_string(kAllTamperTypes[t])
                      << std::fixed << std::setprecision(4) << pop.type_weights[t] << "\n";
        std::cout << "representative configurations:\n";
        for (int t = 0; t < kTamperTypeCount; ++t)
            for (const auto& c : pop.representatives[t].choices)
                std::cout << "  " << to_string(kAllTamperTypes[t]) << " " << c.op_id << ": "
                          << c.variant << " (share " << std::setprecision(3) << c.share
                          << ")\n";

        if (!out_path.empty()) {
            detail::atomic_write_text(out_path, serialize_model(pop));
            std::cout << "model written to " << out_path << "\n";
        }
        if (!reference_path.empty()) {
            PopulationModel ref = load_model_arg(reference_path);
            double d = coefficient_distance(pop.type_weights, ref.type_weights);
            std::cout << "coefficient_distance(fit, reference) = " << std::setprecision(6)
                      << d << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

// ----------------------------------------------------------------- synth

int cmd_synth(const std::string& sources_dir, const std::string& annotations_dir,
              const std::string& model_path, const std::string& table_path, uint64_t seed,
              size_t count, unsigned jobs, const std::string& out_dir, bool overwrite,
              bool strict, const std::string& font_dir) {
    std::vector<LoadedSource> sources;
    ParameterTable table;
    PopulationModel model;
    const FontLibrary* fonts;
    try {
        sources = load_sources(sources_dir, annotations_dir);
        table = load_table_arg(table_path);
        model = load_model_arg(model_path);
        fonts = &font_library(font_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (sources.empty()) {
        std::cerr << "error: no .png sources in " << sources_dir << "\n";
        return kExitUsage;
    }
    auto pool = pool_view(sources);

    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    std::mutex mu;
    std::vector<std::string> warnings;
    std::vector<std::string> written(count);
    std::atomic<bool> abort{false};

    auto worker = [&] {
        while (!abort.load()) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            const LoadedSource& src = sources[i % sources.size()];
            std::string id = sample_name(i);
            try {
                if (src.annotations.empty())
                    throw Error(src.has_annotation_file
                                    ? "annotation file is empty"
                                    : "no annotation file for source '" + src.id + "'");
                auto res = synthesize_sample(src.image, pool, model, table, src.annotations,
                                             seed, id, *fonts, src.id);
                write_sample(out_dir, id, res.tampered, res.mask, res.record, overwrite);
                written[i] = id;
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lock(mu);
                warnings.push_back(id + ": " + e.what());
                if (strict) abort.store(true);
            }
            ++done;
        }
    };

    fs::create_directories(out_dir);
    unsigned n_threads = std::max(1u, jobs);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    DatasetManifest manifest;
    manifest.master_seed = seed;
    manifest.table = table_path.empty() ? "builtin" : table_path;
    manifest.model = model_path.empty() ? "uniform" : model_path;
    for (const auto& id : written)
        if (!id.empty()) manifest.samples.push_back(id);
    for (const auto& s : sources) manifest.sources.push_back(s.id);
    write_manifest(out_dir, manifest);

    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "synthesized " << manifest.samples.size() << "/" << count << " samples into "
              << out_dir << " (seed " << seed << ", " << n_threads << " jobs, "
              << warnings.size() << " warnings)\n";
    if (strict && !warnings.empty()) return kExitValidation;
    return kExitOk;
}

// -------------------------------------------------------------- validate

int cmd_validate(const std::string& dataset_dir, const std::string& sources_dir,
                 const std::string& annotations_dir, const std::string& table_path,
                 const std::string& findings_path, const std::string& font_dir) {
    nlohmann::json findings = nlohmann::json::array();
    auto add_finding = [&](const std::string& sample, const std::string& what) {
        findings.push_back({{"sample", sample}, {"finding", what}});
        std::cerr << "violation: " << sample << ": " << what << "\n";
    };

    // table-only mode
    if (dataset_dir.empty()) {
        try {
            ParameterTable table = load_table_arg(table_path);
            auto violations = validate_table(table);
            for (const auto& v : violations) add_finding(v.path, v.message);
            std::cout << (violations.empty() ? "table valid\n" : "table invalid\n");
            return violations.empty() ? kExitOk : kExitValidation;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (!fs::is_directory(fs::path(dataset_dir) / "images") ||
        !fs::is_directory(fs::path(dataset_dir) / "masks") ||
        !fs::is_directory(fs::path(dataset_dir) / "meta")) {
        std::cerr << "error: dataset layout missing under " << dataset_dir << "\n";
        return kExitUsage;
    }

    std::vector<LoadedSource> sources;
    std::map<std::string, const LoadedSource*> source_by_id;
    const FontLibrary* fonts = &FontLibrary::builtin();
    if (!sources_dir.empty()) {
        try {
            sources = load_sources(sources_dir, annotations_dir);
            fonts = &font_library(font_dir);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        for (const auto& s : sources) source_by_id[s.id] = &s;
    }
    auto pool = pool_view(sources);

    size_t checked = 0;
    std::vector<fs::path> metas;
    for (const auto& e : fs::directory_iterator(fs::path(dataset_dir) / "meta"))
        if (e.is_regular_file() && e.path().extension() == ".json") metas.push_back(e.path());
    std::sort(metas.begin(), metas.end());

    for (const auto& meta_path : metas) {
        std::string id = meta_path.stem().string();
        SampleRecord record;
        try {
            record = parse_record(read_text_file(meta_path));
        } catch (const Error& e) {
            add_finding(id, std::string("meta schema: ") + e.what());
            continue;
        }
        auto paths = sample_paths(dataset_dir, id);
        if (!fs::exists(paths.image) || !fs::exists(paths.mask)) {
            add_finding(id, "missing image or mask file");
            continue;
        }
        ImageBuffer tampered;
        PixelMask mask;
        try {
            tampered = read_png_rgb(paths.image.string());
            mask = read_png_mask(paths.mask.string());
        } catch (const Error& e) {
            add_finding(id, e.what());
            continue;
        }
        if (mask.width() != tampered.width() || mask.height() != tampered.height()) {
            add_finding(id, "mask/image dimension mismatch");
            continue;
        }
        // containment: every mask pixel within a dilated effective geometry
        for (int y = 0; y < mask.height(); ++y)
            for (int x = 0; x < mask.width(); ++x) {
                if (!mask.get(x, y)) continue;
                bool inside = false;
                for (const auto& item : record.items)
                    inside = inside || item.effective.dilated(1).contains(x, y);
                if (!inside) {
                    add_finding(id, "mask pixel (" + std::to_string(x) + "," +
                                        std::to_string(y) +
                                        ") outside effective geometries");
                    y = mask.height();
                    break;
                }
            }
        // with sources available: replay and check locality + reproduction
        if (!record.source_image.empty() && source_by_id.count(record.source_image)) {
            const LoadedSource& src = *source_by_id.at(record.source_image);
            try {
                auto replayed = replay_sample(record, src.image, pool, *fonts);
                if (!(replayed.tampered == tampered))
                    add_finding(id, "replay produced different image bytes");
                if (!(replayed.mask == mask))
                    add_finding(id, "replay produced a different mask");
                auto dilated = dilate3x3(mask);
                for (int y = 0; y < mask.height(); ++y)
                    for (int x = 0; x < mask.width(); ++x) {
                        if (dilated.get(x, y)) continue;
                        if (!(tampered.get(x, y) == src.image.get(x, y))) {
                            add_finding(id, "pixel outside mask differs from original");
                            y = mask.height();
                            break;
                        }
                    }
            } catch (const Error& e) {
                add_finding(id, std::string("replay failed: ") + e.what());
            }
        }
        ++checked;
    }

    if (!findings_path.empty() || !findings.empty()) {
        std::string out = findings_path.empty()
                              ? (fs::path(dataset_dir) / "validate-findings.json").string()
                              : findings_path;
        std::ofstream f(out, std::ios::binary);
        f << findings.dump(2) << "\n";
    }
    std::cout << "validated " << checked << " samples, " << findings.size()
              << " findings\n";
    return findings.empty() ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------- report

void print_top_operations(std::span<const SampleRecord> records, const ParameterTable& table) {
    for (TamperType type : kAllTamperTypes) {
        auto top = top_operations(records, table, type, 8);
        if (top.empty()) continue;
        std::cout << "top operations for " << to_string(type) << ":\n";
        for (const auto& op : top)
            std::cout << "  " << std::left << std::setw(48) << op.label << std::right
                      << std::fixed << std::setw(6) << std::setprecision(1)
                      << op.share * 100.0 << "%  (" << op.count << ")\n";
    }
}

/// Fig. 2 style shares computed from raw edit logs: per type, the fraction
/// of that type's samples using each operation variant.
std::vector<SampleRecord> records_from_logs(const EditLogCorpus& corpus) {
    // reshape logs into pseudo-records (one item per (tamperer, sample))
    std::map<std::pair<std::string, std::string>, ItemRecord> items;
    for (const auto& [tamperer, records] : corpus.by_tamperer)
        for (const auto& r : records) {
            auto key = std::make_pair(tamperer, r.sample_id);
            auto& item = items[key];
            item.type = r.type;
            ResolvedChoice c;
            c.op_id = r.op_id;
            c.variant = r.variant;
            item.choices.push_back(std::move(c));
        }
    SampleRecord all;
    all.sample_id = "logs";
    for (auto& [key, item] : items) all.items.push_back(std::move(item));
    return {std::move(all)};
}

int cmd_report(const std::string& dataset_dir, const std::string& logs_dir,
               const std::string& table_path, const std::string& pred_masks,
               const std::string& out_path) {
    ParameterTable table;
    try {
        table = load_table_arg(table_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<SampleRecord> records;
    try {
        if (!logs_dir.empty()) {
            auto corpus = load_edit_logs(logs_dir);
            if (corpus.by_tamperer.empty()) {
                std::cerr << "error: no edit logs found in " << logs_dir << "\n";
                return kExitUsage;
            }
            records = records_from_logs(corpus);
        } else {
            records = load_records(dataset_dir);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (records.empty()) {
        std::cerr << "error: no samples to report on\n";
        return kExitUsage;
    }

    print_top_operations(records, table);

    nlohmann::json out;
    if (logs_dir.empty()) {
        auto report = frequency_report(records, table);
        std::cout << "\nper-group frequencies (empirical vs configured):\n";
        std::cout << std::left << std::setw(13) << "type" << std::setw(6) << "group"
                  << std::setw(26) << "variant" << std::right << std::setw(10) << "empirical"
                  << std::setw(12) << "configured" << std::setw(9) << "ci" << "\n";
        for (const auto& row : report.rows) {
            if (report.items_per_type[int(row.type)] == 0) continue;
            std::cout << std::left << std::setw(13) << to_string(row.type) << std::setw(6)
                      << row.op_id << std::setw(26) << row.variant << std::right << std::fixed
                      << std::setw(9) << std::setprecision(4) << row.empirical << std::setw(12)
                      << row.configured << std::setw(9) << row.ci_halfwidth << "\n";
        }
        std::cout << "\nchi-square tests per group:\n";
        bool all_pass = true;
        for (const auto& t : report.tests) {
            std::cout << "  " << to_string(t.type) << " " << t.op_id << ": chi2=" << std::fixed
                      << std::setprecision(2) << t.statistic << " dof=" << t.dof
                      << " p=" << std::setprecision(5) << t.p_value << "\n";
            all_pass = all_pass && t.p_value > 0.001;
        }
        std::cout << (all_pass ? "all chi-square tests pass (p > 0.001)\n"
                               : "some chi-square tests FAIL (p <= 0.001)\n");

        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"type", std::string(to_string(row.type))},
                            {"op_id", row.op_id},
                            {"variant", row.variant},
                            {"empirical", row.empirical},
                            {"configured", row.configured},
                            {"ci", row.ci_halfwidth},
                            {"count", row.count}});
        nlohmann::json tests = nlohmann::json::array();
        for (const auto& t : report.tests)
            tests.push_back({{"type", std::string(to_string(t.type))},
                             {"op_id", t.op_id},
                             {"statistic", t.statistic},
                             {"dof", t.dof},
                             {"p_value", t.p_value}});
        out["rows"] = rows;
        out["tests"] = tests;
    }

    // Fig. 2 style block is always emitted
    nlohmann::json tops;
    for (TamperType type : kAllTamperTypes) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& op : top_operations(records, table, type, 8))
            list.push_back(
                {{"variant", op.variant}, {"label", op.label}, {"share", op.share}});
        tops[std::string(to_string(type))] = list;
    }
    out["top_operations"] = tops;

    if (!pred_masks.empty()) {
        double f1_sum = 0.0, auc_sum = 0.0;
        size_t f1_n = 0, auc_n = 0;
        for (const auto& r : records) {
            auto gt_path = fs::path(dataset_dir) / "masks" / (r.sample_id + ".png");
            auto pred_path = fs::path(pred_masks) / (r.sample_id + ".png");
            if (!fs::exists(gt_path) || !fs::exists(pred_path)) continue;
            auto gt = read_png_mask(gt_path.string());
            auto pred = read_png_mask(pred_path.string());
            f1_sum += pixel_f1(pred, gt);
            ++f1_n;
            if (gt.count() > 0 && gt.count() < size_t(gt.width()) * gt.height()) {
                std::vector<double> scores(size_t(gt.width()) * gt.height());
                for (int y = 0; y < gt.height(); ++y)
                    for (int x = 0; x < gt.width(); ++x)
                        scores[size_t(y) * gt.width() + x] = pred.get(x, y) ? 1.0 : 0.0;
                auc_sum += pixel_auc(scores, gt);
                ++auc_n;
            }
        }
        if (f1_n) {
            std::cout << "\npixel metrics over " << f1_n << " samples: F1=" << std::fixed
                      << std::setprecision(4) << f1_sum / f1_n;
            out["pixel_f1"] = f1_sum / f1_n;
            if (auc_n) {
                std::cout << " AUC=" << auc_sum / auc_n;
                out["pixel_auc"] = auc_sum / auc_n;
            }
            std::cout << "\n";
        }
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << out.dump(2) << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const std::string& dataset_dir, const std::string& id,
               const std::string& sources_dir, const std::string& annotations_dir,
               bool check, const std::string& out_dir, const std::string& font_dir) {
    try {
        auto record = parse_record(
            read_text_file(fs::path(dataset_dir) / "meta" / (id + ".json")));
        auto sources = load_sources(sources_dir, annotations_dir);
        std::map<std::string, const LoadedSource*> by_id;
        for (const auto& s : sources) by_id[s.id] = &s;
        if (!by_id.count(record.source_image)) {
            std::cerr << "error: source image '" << record.source_image
                      << "' not found in " << sources_dir << "\n";
            return kExitUsage;
        }
        auto pool = pool_view(sources);
        auto replayed = replay_sample(record, by_id.at(record.source_image)->image, pool,
                                      font_library(font_dir));
        if (check) {
            auto paths = sample_paths(dataset_dir, id);
            auto stored_img = read_png_rgb(paths.image.string());
            auto stored_mask = read_png_mask(paths.mask.string());
            bool ok = replayed.tampered == stored_img && replayed.mask == stored_mask;
            std::cout << (ok ? "replay matches stored bytes\n"
                             : "replay DIFFERS from stored bytes\n");
            return ok ? kExitOk : kExitValidation;
        }
        std::string dest = out_dir.empty() ? dataset_dir + "/replay" : out_dir;
        write_sample(dest, id, replayed.tampered, replayed.mask, replayed.record, true);
        std::cout << "replayed " << id << " into " << dest << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic tampered-text-image synthesis toolkit"};
    app.require_subcommand(1);

    // fit
    std::string fit_logs, fit_out, fit_reference;
    double fit_ind = 0.02, fit_pop = 0.05;
    auto* fit = app.add_subcommand("fit", "fit a population model from edit logs");
    fit->add_option("--logs", fit_logs, "edit log directory")->required();
    fit->add_option("--individual-threshold", fit_ind, "minimum within-type usage share");
    fit->add_option("--population-threshold", fit_pop, "minimum individual share");
    fit->add_option("--out", fit_out, "output model file");
    fit->add_option("--reference", fit_reference, "model to compare coefficients against");

    // synth
    std::string sy_sources, sy_annotations, sy_model, sy_table, sy_out, sy_fonts;
    uint64_t sy_seed = 0;
    size_t sy_count = 1;
    unsigned sy_jobs = 1;
    bool sy_overwrite = false, sy_strict = false;
    auto* synth = app.add_subcommand("synth", "synthesize tampered samples");
    synth->add_option("--sources", sy_sources, "directory of source .png images")->required();
    synth->add_option("--annotations", sy_annotations,
                      "directory of <id>.json annotations (default: beside sources)");
    synth->add_option("--model", sy_model, "population model file (default: uniform)");
    synth->add_option("--table", sy_table, "parameter table file (default: built-in)");
    synth->add_option("--seed", sy_seed, "master seed")->required();
    synth->add_option("--count", sy_count, "number of samples")->required();
    synth->add_option("--jobs", sy_jobs, "worker threads");
    synth->add_option("--out", sy_out, "output dataset directory")->required();
    synth->add_flag("--overwrite", sy_overwrite, "allow overwriting existing samples");
    synth->add_flag("--strict", sy_strict, "fail fast instead of skip-and-warn");
    synth->add_option("--font-dir", sy_fonts, "font directory (or FSTS_FONT_DIR)");

    // validate
    std::string va_dataset, va_sources, va_annotations, va_table, va_findings, va_fonts;
    auto* validate = app.add_subcommand("validate", "check dataset invariants");
    validate->add_option("--dataset", va_dataset, "dataset directory");
    validate->add_option("--sources", va_sources, "source images for replay checks");
    validate->add_option("--annotations", va_annotations, "annotation directory");
    validate->add_option("--table", va_table, "parameter table to validate");
    validate->add_option("--findings", va_findings, "machine-readable findings file");
    validate->add_option("--font-dir", va_fonts, "font directory (or FSTS_FONT_DIR)");

    // report
    std::string re_dataset, re_logs, re_table, re_pred, re_out;
    auto* report = app.add_subcommand("report", "frequency and metric reports");
    report->add_option("--dataset", re_dataset, "dataset directory");
    report->add_option("--logs", re_logs, "edit log directory (Fig-style shares)");
    report->add_option("--table", re_table, "parameter table file");
    report->add_option("--pred-masks", re_pred, "predicted masks directory for F1/AUC");
    report->add_option("--out", re_out, "machine-readable report file");

    // replay
    std::string rp_dataset, rp_id, rp_sources, rp_annotations, rp_out, rp_fonts;
    bool rp_check = false;
    auto* replay = app.add_subcommand("replay", "re-execute a sample record");
    replay->add_option("--dataset", rp_dataset, "dataset directory")->required();
    replay->add_option("--id", rp_id, "sample id")->required();
    replay->add_option("--sources", rp_sources, "source images directory")->required();
    replay->add_option("--annotations", rp_annotations, "annotation directory");
    replay->add_flag("--check", rp_check, "compare against stored bytes");
    replay->add_option("--out", rp_out, "write replayed sample here");
    replay->add_option("--font-dir", rp_fonts, "font directory (or FSTS_FONT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fit->parsed())
            return cmd_fit(fit_logs, fit_ind, fit_pop, fit_out, fit_reference);
        if (synth->parsed())
            return cmd_synth(sy_sources, sy_annotations, sy_model, sy_table, sy_seed,
                             sy_count, sy_jobs, sy_out, sy_overwrite, sy_strict, sy_fonts);
        if (validate->parsed())
            return cmd_validate(va_dataset, va_sources, va_annotations, va_table,
                                va_findings, va_fonts);
        if (report->parsed()) {
            if (re_dataset.empty() && re_logs.empty()) {
                std::cerr << "error: report needs --dataset or --logs\n";
                return kExitUsage;
            }
            return cmd_report(re_dataset, re_logs, re_table, re_pred, re_out);
        }
        if (replay->parsed())
            return cmd_replay(rp_dataset, rp_id, rp_sources, rp_annotations, rp_check,
                              rp_out, rp_fonts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
