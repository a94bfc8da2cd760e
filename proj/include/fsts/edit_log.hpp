#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fsts/types.hpp"

namespace fsts {

// Editing-log ingestion. One record per line, tab-separated:
//
//   tamperer_id <TAB> sample_id <TAB> type_id <TAB> op_id <TAB> variant
//       <TAB> key=value;key=value
//
// The trailing parameter field may be empty. Lines starting with '#' and
// blank lines are ignored.

struct EditLogRecord {
    std::string tamperer_id;
    std::string sample_id;
    TamperType type = TamperType::CopyMove;
    std::string op_id;
    std::string variant;
    std::vector<std::pair<std::string, std::string>> params;

    bool operator==(const EditLogRecord&) const = default;
};

inline std::string format_edit_log_line(const EditLogRecord& r) {
    std::string params;
    for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) params += ';';
        params += r.params[i].first + "=" + r.params[i].second;
    }
    std::string line;
    line += r.tamperer_id;
    line += '\t';
    line += r.sample_id;
    line += '\t';
    line += to_string(r.type);
    line += '\t';
    line += r.op_id;
    line += '\t';
    line += r.variant;
    line += '\t';
    line += params;
    return line;
}

inline EditLogRecord parse_edit_log_line(const std::string& line, size_t line_no = 0) {
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("edit log line " + std::to_string(line_no) + ": " + what);
    };
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (fields.size() != 6) throw fail("expected 6 tab-separated fields, got " +
                                       std::to_string(fields.size()));
    EditLogRecord r;
    r.tamperer_id = fields[0];
    r.sample_id = fields[1];
    if (r.tamperer_id.empty()) throw fail("empty tamperer_id");
    if (r.sample_id.empty()) throw fail("empty sample_id");
    if (!is_tamper_type(fields[2])) throw fail("unknown type_id '" + fields[2] + "'");
    r.type = tamper_type_from_string(fields[2]);
    r.op_id = fields[3];
    r.variant = fields[4];
    if (r.op_id.empty()) throw fail("empty op_id");
    if (r.variant.empty()) throw fail("empty variant");
    const std::string& params = fields[5];
    size_t pos = 0;
    while (pos < params.size()) {
        size_t semi = params.find(';', pos);
        std::string kv = params.substr(pos, semi == std::string::npos ? std::string::npos
                                                                      : semi - pos);
        if (!kv.empty()) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) throw fail("parameter without '=': " + kv);
            r.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return r;
}

/// Parses a whole log document. Malformed lines throw with their line number.
inline std::vector<EditLogRecord> parse_edit_log(const std::string& text) {
    std::vector<EditLogRecord> out;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_edit_log_line(line, line_no));
    }
    return out;
}

}  // namespace fsts
