#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsts/annotations.hpp"
#include "fsts/edit_log.hpp"
#include "fsts/image.hpp"
#include "fsts/png_io.hpp"
#include "fsts/record.hpp"
#include "fsts/types.hpp"

namespace fsts {

// Dataset layout:
//
//   <out>/images/<id>.png    tampered image (RGB)
//   <out>/masks/<id>.png     ground-truth mask (gray, {0,255})
//   <out>/meta/<id>.json     SampleRecord
//   <out>/manifest.json      run parameters + sample ids
//
// Writes are atomic per sample: temp file + rename, so concurrent workers
// never expose partial files.

struct SamplePaths {
    std::filesystem::path image;
    std::filesystem::path mask;
    std::filesystem::path meta;
};

inline SamplePaths sample_paths(const std::filesystem::path& out_dir,
                                const std::string& sample_id) {
    return {out_dir / "images" / (sample_id + ".png"),
            out_dir / "masks" / (sample_id + ".png"),
            out_dir / "meta" / (sample_id + ".json")};
}

namespace detail {

inline void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

template <typename WriteFn>
inline void atomic_write_png(const std::filesystem::path& path, WriteFn&& write) {
    auto tmp = path;
    tmp += ".tmp";
    write(tmp.string());
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Writes one synthesized sample. Refuses to overwrite existing files
/// unless `overwrite` is set.
inline SamplePaths write_sample(const std::filesystem::path& out_dir,
                                const std::string& sample_id, const ImageBuffer& tampered,
                                const PixelMask& mask, const SampleRecord& record,
                                bool overwrite = false) {
    auto paths = sample_paths(out_dir, sample_id);
    std::filesystem::create_directories(paths.image.parent_path());
    std::filesystem::create_directories(paths.mask.parent_path());
    std::filesystem::create_directories(paths.meta.parent_path());
    if (!overwrite)
        for (const auto& p : {paths.image, paths.mask, paths.meta})
            if (std::filesystem::exists(p))
                throw IoError("refusing to overwrite " + p.string() +
                              " (pass --overwrite to allow)");
    detail::atomic_write_png(paths.image,
                             [&](const std::string& p) { write_png_rgb(p, tampered); });
    detail::atomic_write_png(paths.mask,
                             [&](const std::string& p) { write_png_mask(p, mask); });
    detail::atomic_write_text(paths.meta, serialize_record(record));
    return paths;
}

struct DatasetManifest {
    int format_version = 1;
    uint64_t master_seed = 0;
    std::string table;  // "builtin" or a path
    std::string model;  // "uniform" or a path
    std::vector<std::string> samples;
    std::vector<std::string> sources;
};

inline std::string serialize_manifest(const DatasetManifest& m) {
    nlohmann::json j;
    j["format_version"] = m.format_version;
    j["master_seed"] = m.master_seed;
    j["table"] = m.table;
    j["model"] = m.model;
    j["samples"] = m.samples;
    j["sources"] = m.sources;
    return j.dump(2) + "\n";
}

inline DatasetManifest parse_manifest(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest parse failure: ") + e.what());
    }
    DatasetManifest m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != 1) throw ParseError("unsupported manifest format_version");
    m.master_seed = j.at("master_seed").get<uint64_t>();
    m.table = j.at("table").get<std::string>();
    m.model = j.at("model").get<std::string>();
    m.samples = j.at("samples").get<std::vector<std::string>>();
    m.sources = j.at("sources").get<std::vector<std::string>>();
    return m;
}

inline void write_manifest(const std::filesystem::path& out_dir, const DatasetManifest& m) {
    detail::atomic_write_text(out_dir / "manifest.json", serialize_manifest(m));
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

/// Loads every .log file in a directory, grouped by tamperer. Duplicate
/// (tamperer, sample, op) lines are dropped with a warning count.
struct EditLogCorpus {
    std::map<std::string, std::vector<EditLogRecord>> by_tamperer;
    size_t records = 0;
    size_t duplicates = 0;
};

inline EditLogCorpus load_edit_logs(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw IoError("edit log directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && (e.path().extension() == ".log" ||
                                    e.path().extension() == ".tsv"))
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    EditLogCorpus corpus;
    std::set<std::string> seen;
    for (const auto& f : files) {
        std::vector<EditLogRecord> records;
        try {
            records = parse_edit_log(read_text_file(f));
        } catch (const Error& e) {
            throw ParseError(f.string() + ": " + e.what());
        }
        for (auto& r : records) {
            std::string key = r.tamperer_id + "\x1f" + r.sample_id + "\x1f" + r.op_id +
                              "\x1f" + r.variant;
            if (!seen.insert(key).second) {
                ++corpus.duplicates;
                continue;
            }
            corpus.by_tamperer[r.tamperer_id].push_back(std::move(r));
            ++corpus.records;
        }
    }
    return corpus;
}

/// All sample records under <dir>/meta, ordered by id.
inline std::vector<SampleRecord> load_records(const std::filesystem::path& dataset_dir) {
    auto meta = dataset_dir / "meta";
    if (!std::filesystem::is_directory(meta))
        throw IoError("dataset meta directory not found: " + meta.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(meta))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<SampleRecord> out;
    for (const auto& f : files) {
        try {
            out.push_back(parse_record(read_text_file(f)));
        } catch (const Error& e) {
            throw ParseError(f.string() + ": " + e.what());
        }
    }
    return out;
}

}  // namespace fsts
