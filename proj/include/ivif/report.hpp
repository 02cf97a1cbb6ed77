#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ivif/grid.hpp"
#include "ivif/pipeline.hpp"
#include "ivif/problem.hpp"

namespace ivif {

/// A labelled numeric matrix. IVIFN tables are expanded to four columns per
/// attribute, suffixed .lm/.rm/.ln/.rn.
struct Table {
    std::string name;
    std::string corner;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Grid<double> values;
};

struct Report {
    std::string method;
    std::vector<Table> tables;
    std::vector<std::string> ranking;
    /// Key/value pairs; values are already JSON-encoded scalars or arrays.
    std::vector<std::pair<std::string, std::string>> metadata;

    const Table* find(const std::string& name) const;
};

inline constexpr const char* kReportFormat = "ivif-report/1";
inline constexpr const char* kSweepFormat = "ivif-sweep/1";

/// Without intermediates the report holds the weights, the method's result
/// table and the ranking.
Report build_report(const Problem& problem, const PipelineResult& result, const PipelineOptions& options,
                    bool emit_intermediates);

/// Shortest text that parses back to the same double.
std::string format_number(double v);
/// Half-away-from-zero rounding to three decimals.
double round3(double v);

std::string report_to_json(const Report& report);
void write_table_csv(const Table& table, std::ostream& out, bool rounded = false);
/// Writes <dir>/<table>.csv, <dir>/<table>.rounded.csv, ranking.csv and
/// metadata.csv. Returns the paths written.
std::vector<std::string> write_report_csv(const Report& report, const std::string& dir);

std::string sweep_to_csv(const SweepResult& sweep);
std::string sweep_to_json(const SweepResult& sweep);

/// Machine-readable error record for the CLI.
std::string error_record(const std::string& kind, const std::string& message, const std::string& stage = "",
                         const std::string& location = "");

}  // namespace ivif
