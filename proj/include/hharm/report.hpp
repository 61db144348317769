#pragma once

#include <string>

#include "json.hpp"

#include "hharm/ball_average.hpp"

namespace hharm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class ReportFormat { Table, Json, Csv };

// Envelope for every CLI result. Serialized key order is fixed, so two
// identical invocations differ at most in the timestamp field.
struct ReportDocument {
    std::string command;
    Json params = Json::object();
    Json result = Json::object();
    std::string version = kVersion;
    std::string timestamp;

    Json to_json() const;
    static ReportDocument from_json(const Json& j);
};

std::string iso8601_utc_now();

Json classification_to_json(const ClassificationTable& table);

// Fixed header: k,l,m,degree,strongly_harmonic,defect_leading_term
std::string classification_to_csv(const ClassificationTable& table);

// Human-readable rendering; classification results come out as an aligned
// column table, everything else as indented key/value lines.
std::string render_table(const ReportDocument& doc);

}  // namespace hharm
