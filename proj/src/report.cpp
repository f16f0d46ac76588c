#include "nazgsa/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nazgsa/errors.hpp"

namespace nazgsa {

namespace {

std::string cell_text(const nlohmann::ordered_json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    return value.dump();
}

}  // namespace

std::string render_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = report.command;
    doc["seed"] = report.seed;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& row : report.rows) {
        doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_csv(const Report& report) {
    std::ostringstream out;
    if (report.rows.empty()) {
        out << "schema_version\r\n";
        return out.str();
    }
    std::vector<std::string> columns;
    for (const auto& item : report.rows.front().items()) {
        columns.push_back(item.key());
    }
    out << "schema_version";
    for (const auto& column : columns) {
        out << ',' << csv_escape(column);
    }
    out << "\r\n";
    for (const Row& row : report.rows) {
        require(row.size() == columns.size(), "render_csv: rows have different columns");
        out << kReportSchema;
        for (const auto& column : columns) {
            require(row.contains(column), "render_csv: row is missing column " + column);
            out << ',' << csv_escape(cell_text(row.at(column)));
        }
        out << "\r\n";
    }
    return out.str();
}

Row to_row(const ReportRow& row, std::uint64_t seed) {
    const LowerBoundReport& c = row.chain;
    Row out;
    out["n"] = c.n;
    out["alpha"] = row.alpha;
    out["r"] = c.r;
    out["t"] = c.t;
    out["s"] = c.s;
    out["c1"] = c.c1;
    out["shell_volume"] = c.shell_volume;
    out["expected_influence"] = c.exact_quadrature;
    out["expected_gsa"] = row.expected_gsa;
    out["ratio_to_n14"] = c.ratio_to_n14;
    out["shell_infimum"] = c.shell_infimum;
    out["chain_value"] = c.chain_value;
    out["power_relaxed"] = c.power_relaxed;
    out["bernoulli_relaxed"] = c.bernoulli_relaxed;
    out["limiting_form"] = c.limiting_form;
    out["gsa_lower"] = c.gsa_lower;
    out["bernoulli_factor_min"] = c.bernoulli_factor_min;
    out["g_flatness"] = c.g_flatness;
    out["f_over_g"] = c.f_over_g;
    out["ball_upper"] = row.bounds.ball_upper;
    out["raic_upper"] = row.bounds.raic_upper;
    out["nazarov_lower"] = row.bounds.nazarov_lower_asymptotic;
    out["seed"] = seed;
    out["identity"] = "dilation-influence-radial";
    return out;
}

Row to_row(const std::string& name, const Estimate& estimate, const std::string& identity) {
    Row out;
    out["name"] = name;
    out["value"] = estimate.value;
    out["stderr"] = estimate.std_error;
    out["samples"] = estimate.samples;
    out["seed"] = estimate.seed;
    out["identity"] = identity;
    return out;
}

Row scalar_row(const std::string& name, double value, const std::string& identity,
               std::uint64_t seed) {
    Row out;
    out["name"] = name;
    out["value"] = value;
    out["stderr"] = 0.0;
    out["samples"] = 0;
    out["seed"] = seed;
    out["identity"] = identity;
    return out;
}

std::string render_svg(std::span<const ReportRow> rows) {
    require(!rows.empty(), "render_svg: no rows");
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kMargin = 50.0;

    struct Series {
        const char* label;
        const char* colour;
        std::vector<std::pair<double, double>> points;
    };
    std::vector<Series> series{{"E[GSA]/n^1/4", "#1f77b4", {}},
                               {"Raic/n^1/4", "#d62728", {}},
                               {"e^-5/4", "#2ca02c", {}}};
    double x_min = INFINITY, x_max = -INFINITY, y_max = 0.0;
    for (const ReportRow& row : rows) {
        const double x = std::log2(static_cast<double>(row.chain.n));
        const double scale = std::pow(static_cast<double>(row.chain.n), 0.25);
        series[0].points.emplace_back(x, row.chain.ratio_to_n14);
        series[1].points.emplace_back(x, row.bounds.raic_upper / scale);
        series[2].points.emplace_back(x, row.bounds.nazarov_lower_asymptotic / scale);
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_max = std::max({y_max, row.chain.ratio_to_n14, row.bounds.raic_upper / scale});
    }
    if (x_max == x_min) {
        x_max = x_min + 1.0;
    }
    y_max *= 1.1;
    auto px = [&](double x) { return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin); };
    auto py = [&](double y) { return kHeight - kMargin - y / y_max * (kHeight - 2 * kMargin); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << kWidth - kMargin
        << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << kMargin << "\" y2=\""
        << py(y_max) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">log2 n</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        svg << "<polyline fill=\"none\" stroke=\"" << series[k].colour << "\" points=\"";
        for (const auto& [x, y] : series[k].points) {
            svg << px(x) << ',' << py(y) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << kWidth - kMargin - 120 << "\" y=\"" << kMargin + 18 * k
            << "\" fill=\"" << series[k].colour << "\">" << series[k].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nazgsa
