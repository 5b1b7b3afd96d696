#pragma once

// Analysis reports: tables (text, CSV, JSON), their parsers, score-matrix CSV
// export, and SVG bar charts of overall performance against cluster size.

#include "perfclust/performance.hpp"
#include "perfclust/score_matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perfclust {

struct KResult {
    std::size_t k = 0;
    bool converged = false;
    std::size_t iterations = 0;
    double mse = 0.0;
    std::vector<ClusterPerformance> clusters;  ///< sorted by cluster index
    std::optional<double> mean_silhouette;

    bool operator==(const KResult&) const = default;
};

struct AnalysisReport {
    std::size_t n_students = 0;
    std::size_t n_courses = 0;
    std::vector<KResult> per_k;  ///< sorted by k

    const KResult* find(std::size_t k) const noexcept;

    bool operator==(const AnalysisReport&) const = default;
};

enum class TableFormat { Text, Csv, Json };

/// Two decimals, round half up, applied to the shortest decimal form of value
/// (so 62.225 displays as 62.23).
std::string format_display(double value);

/// Shortest decimal text that parses back to exactly value.
std::string format_exact(double value);

std::string render_table(const AnalysisReport& report, TableFormat format);
void render_table(const AnalysisReport& report, TableFormat format, std::ostream& out);

/// Parsers for the CSV and JSON renderings. Throw InvalidInput on malformed
/// documents.
AnalysisReport parse_report_json(std::string_view text);
AnalysisReport parse_report_csv(std::string_view text);

/// Dispatches on the first non-blank character: '{' selects JSON, anything
/// else CSV.
AnalysisReport parse_report(std::string_view text);

/// Score matrix in the ingestion dialect: header "id,<course>...", one row
/// per student, exact shortest-form numbers. Course names default to C1..CM.
std::string write_csv(const ScoreMatrix& matrix);

/// Standalone SVG 1.1 bar chart for one k: one bar per non-empty cluster,
/// labeled by cluster size on the x axis, height = overall on a 0-100 axis.
/// Throws InvalidInput when the report has no entry for k.
std::string render_chart(const AnalysisReport& report, std::size_t k);

}  // namespace perfclust
