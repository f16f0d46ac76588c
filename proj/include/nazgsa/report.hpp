#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nazgsa/estimators.hpp"
#include "nazgsa/radial.hpp"

namespace nazgsa {

/// Version tag written into every JSON document and CSV row.
inline constexpr const char* kReportSchema = "nazgsa-report/1";

using Row = nlohmann::ordered_json;

/// One run's output: a flat table of rows sharing the same columns.
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<Row> rows;
};

/// {"schema", "command", "seed", "rows": [...]}, UTF-8, one document.
std::string render_json(const Report& report);

/// RFC-4180 CSV; header from the first row's keys, prefixed by
/// schema_version. Every row must have the same keys in the same order.
std::string render_csv(const Report& report);

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

/// Scan cell with the bounds columns.
Row to_row(const ReportRow& row, std::uint64_t seed);

/// Monte Carlo quantity: name, value, stderr, samples, seed, identity.
Row to_row(const std::string& name, const Estimate& estimate, const std::string& identity);

/// Deterministic quantity: name, value, identity (and seed for traceability).
Row scalar_row(const std::string& name, double value, const std::string& identity,
               std::uint64_t seed);

/// Static SVG line chart of ratio_to_n14 against n for one alpha, with the
/// bound curves divided by n^(1/4).
std::string render_svg(std::span<const ReportRow> rows);

}  // namespace nazgsa
