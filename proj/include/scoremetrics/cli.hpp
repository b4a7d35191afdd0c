#pragma once

// Command-line front end: CSV ingestion, JSON report (de)serialization and the
// subcommand drivers behind the `scoremetrics` executable.

#include "scoremetrics/analytic_curves.hpp"
#include "scoremetrics/calibration_validation.hpp"
#include "scoremetrics/core.hpp"
#include "scoremetrics/empirical_metrics.hpp"
#include "scoremetrics/imputed_metrics.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scoremetrics::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string subcommand;

    std::string input;
    std::string score_col = "score";
    std::string default_col = "default";
    bool flip_scores = false;
    std::optional<std::size_t> thin_n;
    std::optional<std::size_t> thin_d;
    std::uint64_t seed = 0;
    bool emit_curves = false;

    std::optional<double> ar;
    std::optional<double> lar;
    std::optional<double> rar;

    std::optional<double> k;
    std::optional<std::string> sweep;
    std::optional<double> tol;

    std::string binary_report;
    std::string imputed_report;
    double z = kDefaultZ;
    std::optional<double> band;

    std::string out;
    std::optional<OutputFormat> format;
};

// --- numbers ------------------------------------------------------------

/// Rounds to 12 significant digits; the value every report carries.
double quantize(double value);
/// Shortest decimal text of quantize(value); always uses '.' as separator.
std::string format_number(double value);
/// Strict locale-independent parse of a whole field.
std::optional<double> parse_number(std::string_view text);

// --- CSV ----------------------------------------------------------------

/// Splits one CSV record (double quotes may enclose fields, "" escapes a quote).
std::vector<std::string> split_csv_line(std::string_view line);

/// Reads `<score_col>,<default_col>` rows. Errors name the offending line.
ScoreSample read_binary_csv(std::istream& in, const std::string& score_col, const std::string& default_col,
                            bool flip_scores);
/// Reads `grade,count,pd` rows in file order.
GradeTable read_grade_csv(std::istream& in);

// --- JSON ---------------------------------------------------------------

Json report_to_json(const MetricReport& report);
/// Inverse of report_to_json; checks schema_version and field types.
MetricReport report_from_json(const Json& doc);
Json points_to_json(std::span<const Point> points);
Json decomposition_to_json(const TrapezoidDecomposition& t);
Json verdict_to_json(const ValidationVerdict& verdict);

/// JSON text with two-space indentation and a trailing newline.
std::string dump(const Json& doc);

// --- commands -----------------------------------------------------------

/// Sweep specification "lo:hi:step"; the grid has round((hi − lo)/step) + 1 points.
std::vector<double> parse_sweep(const std::string& spec);

std::string cmd_binary(const RunConfig& config);
std::string cmd_imputed(const RunConfig& config);
std::string cmd_analyze(const RunConfig& config);
std::string cmd_burgt(const RunConfig& config);
std::string cmd_validate(const RunConfig& config);

/// Parses arguments, dispatches, writes output (stdout or --out) and maps
/// errors to exit codes: 2 for input problems, 3 for numerical infeasibility.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace scoremetrics::cli
