#include "hharm/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <vector>

namespace hharm {

Json ReportDocument::to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["params"] = params;
    j["result"] = result;
    j["version"] = version;
    j["timestamp"] = timestamp;
    return j;
}

ReportDocument ReportDocument::from_json(const Json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.params = j.at("params");
    doc.result = j.at("result");
    doc.version = j.at("version").get<std::string>();
    doc.timestamp = j.at("timestamp").get<std::string>();
    return doc;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

Json classification_to_json(const ClassificationTable& table) {
    Json rows = Json::array();
    for (const auto& row : table) {
        Json r = Json::object();
        r["k"] = row.index.k;
        r["l"] = row.index.l;
        r["m"] = row.index.m;
        r["degree"] = row.degree;
        r["strongly_harmonic"] = row.strongly_harmonic;
        r["defect_leading_term"] = row.defect_leading_term;
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string json_scalar_to_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Array of flat objects -> aligned columns.
std::string rows_to_table(const Json& rows, const std::string& indent) {
    std::vector<std::string> headers;
    for (const auto& [key, value] : rows.front().items()) {
        (void)value;
        headers.push_back(key);
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back(headers);
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& h : headers)
            line.push_back(row.contains(h) ? json_scalar_to_text(row.at(h)) : "");
        cells.push_back(std::move(line));
    }
    std::vector<size_t> width(headers.size(), 0);
    for (const auto& line : cells)
        for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream out;
    for (const auto& line : cells) {
        out << indent;
        for (size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

void render_value(std::ostringstream& out, const std::string& key, const Json& value,
                  const std::string& indent) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << indent << key << ":\n" << rows_to_table(value, indent + "  ");
    } else if (value.is_object()) {
        out << indent << key << ":\n";
        for (const auto& [k, v] : value.items()) render_value(out, k, v, indent + "  ");
    } else {
        out << indent << key << ": " << json_scalar_to_text(value) << '\n';
    }
}

}  // namespace

std::string classification_to_csv(const ClassificationTable& table) {
    std::ostringstream out;
    out << "k,l,m,degree,strongly_harmonic,defect_leading_term\n";
    for (const auto& row : table) {
        out << row.index.k << ',' << row.index.l << ',' << row.index.m << ',' << row.degree << ','
            << (row.strongly_harmonic ? "true" : "false") << ','
            << csv_field(row.defect_leading_term) << '\n';
    }
    return out.str();
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "hharm " << doc.version << "  " << doc.command << "  " << doc.timestamp << '\n';
    if (!doc.params.empty()) {
        out << "parameters:\n";
        for (const auto& [k, v] : doc.params.items()) render_value(out, k, v, "  ");
    }
    out << "result:\n";
    for (const auto& [k, v] : doc.result.items()) render_value(out, k, v, "  ");
    return out.str();
}

}  // namespace hharm
