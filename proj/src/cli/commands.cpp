#include "scoremetrics/cli.hpp"

#include "scoremetrics/errors.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace scoremetrics::cli {
namespace {

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return in;
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback)
{
    return config.format.value_or(fallback);
}

std::string csv_row(std::initializer_list<std::string> cells)
{
    std::string line;
    for (const auto& cell : cells) {
        if (!line.empty()) line += ',';
        line += cell;
    }
    return line + "\n";
}

std::string optional_cell(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string();
}

std::string report_csv(const MetricReport& r)
{
    return csv_row({"source", "ar", "lar", "rar", "sigma_ar_exact", "sigma_ar_simplified", "n", "d"}) +
           csv_row({std::string(to_string(r.source)), format_number(r.ar), format_number(r.lar),
                    format_number(r.rar), optional_cell(r.sigma_ar), optional_cell(r.sigma_ar_simplified),
                    format_number(r.n_nondefault), format_number(r.n_default)});
}

double require_value(const std::optional<double>& v, const char* flag)
{
    if (!v) {
        throw InputError(std::string("missing required option ") + flag);
    }
    return *v;
}

Json read_json_file(const std::string& path)
{
    auto in = open_input(path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace

std::vector<double> parse_sweep(const std::string& text)
{
    std::vector<double> values;
    std::size_t start = 0;
    for (;;) {
        const auto colon = text.find(':', start);
        const auto piece = text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
        const auto v = parse_number(piece);
        if (!v || !std::isfinite(*v)) {
            throw InputError("sweep must look like lo:hi:step, got '" + text + "'");
        }
        values.push_back(*v);
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (values.size() != 3) {
        throw InputError("sweep must look like lo:hi:step, got '" + text + "'");
    }
    const double lo = values[0];
    const double hi = values[1];
    const double step = values[2];
    if (!(step > 0.0) || hi < lo) {
        throw InputError("sweep needs lo <= hi and step > 0, got '" + text + "'");
    }
    const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Rounding strips the accumulated representation error of lo + i·step.
        grid.push_back(quantize(lo + static_cast<double>(i) * step));
    }
    return grid;
}

std::string cmd_binary(const RunConfig& config)
{
    auto in = open_input(config.input);
    auto sample = read_binary_csv(in, config.score_col, config.default_col, config.flip_scores);
    if (config.thin_n || config.thin_d) {
        constexpr auto unlimited = std::numeric_limits<std::size_t>::max();
        sample = thin(sample, config.thin_n.value_or(unlimited), config.thin_d.value_or(unlimited), config.seed);
    }
    const auto report = binary_report(sample);
    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        return report_csv(report);
    }
    auto doc = report_to_json(report);
    if (config.emit_curves) {
        doc["curves"] = {{"roc", points_to_json(empirical_roc(sample).points())},
                         {"cap", points_to_json(cap_curve(sample).points())}};
    }
    return dump(doc);
}

std::string cmd_imputed(const RunConfig& config)
{
    auto in = open_input(config.input);
    const auto table = read_grade_csv(in);
    const auto report = imputed_report(table);
    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        return report_csv(report);
    }
    auto doc = report_to_json(report);
    doc["curves"] = {{"roc", points_to_json(imputed_roc(table).points())}};
    return dump(doc);
}

std::string cmd_analyze(const RunConfig& config)
{
    const double ar = require_value(config.ar, "--ar");
    const double lar = require_value(config.lar, "--lar");
    const double rar = require_value(config.rar, "--rar");
    const auto bounds = lar_rar_bounds(ar);
    const auto t = trapezoid_decomposition(ar, lar, rar);

    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        std::string out = csv_row({"series", "x", "y"});
        auto series = [&](const char* name, const std::vector<Point>& pts) {
            for (const auto& p : pts) {
                out += csv_row({name, format_number(p.x), format_number(p.y)});
            }
        };
        series("triangle_left", {{0.0, 0.0}, {t.mult.a_lar, t.mult.a_lar + ar}, {1.0, 1.0}});
        series("triangle_right", {{0.0, 0.0}, {t.mult.a_rar, t.mult.a_rar + ar}, {1.0, 1.0}});
        series("trapezoid", t.polyline());
        return out;
    }

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["source"] = "analysis";
    doc["metrics"] = {{"ar", quantize(ar)}, {"lar", quantize(lar)}, {"rar", quantize(rar)}};
    doc["bounds"] = {{"min", quantize(bounds.min)}, {"max", quantize(bounds.max)}};
    doc["decomposition"] = decomposition_to_json(t);
    return dump(doc);
}

std::string cmd_burgt(const RunConfig& config)
{
    const int modes = (config.k ? 1 : 0) + (config.ar ? 1 : 0) + (config.sweep ? 1 : 0);
    if (modes != 1) {
        throw InputError("burgt needs exactly one of --k, --ar, --sweep");
    }
    const double tol = config.tol.value_or(1e-9);
    const bool csv = format_or(config, OutputFormat::csv) == OutputFormat::csv;

    if (config.sweep) {
        const auto grid = parse_sweep(*config.sweep);
        const auto rows = burgt_preference_sweep(grid, tol);
        if (csv) {
            std::string out = csv_row({"ar", "k", "lar", "rar", "min_bound", "max_bound"});
            for (const auto& r : rows) {
                out += csv_row({format_number(r.ar), format_number(r.k), format_number(r.lar), format_number(r.rar),
                                format_number(r.min_bound), format_number(r.max_bound)});
            }
            return out;
        }
        Json table = Json::array();
        for (const auto& r : rows) {
            table.push_back({{"ar", quantize(r.ar)},
                             {"k", quantize(r.k)},
                             {"lar", quantize(r.lar)},
                             {"rar", quantize(r.rar)},
                             {"min_bound", quantize(r.min_bound)},
                             {"max_bound", quantize(r.max_bound)}});
        }
        return dump({{"schema_version", kSchemaVersion}, {"source", "burgt"}, {"rows", std::move(table)}});
    }

    const double k = config.k ? *config.k : burgt_k(*config.ar);
    const double ar = burgt_ar(k);
    const auto curve = CurveModel::burgt(k);
    const double lar = lar_integral(curve, tol);
    const double rar = rar_integral(curve, tol);
    if (csv) {
        return csv_row({"k", "ar", "lar", "rar"}) +
               csv_row({format_number(k), format_number(ar), format_number(lar), format_number(rar)});
    }
    Json row = {{"k", quantize(k)}, {"ar", quantize(ar)}, {"lar", quantize(lar)}, {"rar", quantize(rar)}};
    return dump({{"schema_version", kSchemaVersion}, {"source", "burgt"}, {"rows", Json::array({row})}});
}

std::string cmd_validate(const RunConfig& config)
{
    if (config.binary_report.empty() || config.imputed_report.empty()) {
        throw InputError("validate needs --binary and --imputed report paths");
    }
    const auto binary = report_from_json(read_json_file(config.binary_report));
    const auto imputed = report_from_json(read_json_file(config.imputed_report));
    const auto verdict = validate(binary, imputed, config.z, config.band);
    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        return csv_row({"gini_consistent", "ar_gap", "z", "band", "preference_binary", "preference_imputed",
                        "preference_consistent", "dominant_metric_gap"}) +
               csv_row({verdict.gini_consistent ? "true" : "false", format_number(verdict.ar_gap),
                        format_number(verdict.z), format_number(verdict.band),
                        std::string(to_string(verdict.preference_binary)),
                        std::string(to_string(verdict.preference_imputed)),
                        verdict.preference_consistent ? "true" : "false", format_number(verdict.dominant_metric_gap)});
    }
    return dump(verdict_to_json(verdict));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    CLI::App app{"Discriminatory power metrics for rating and scoring models", "scoremetrics"};
    app.require_subcommand(1);

    std::string format;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", config.out, "Write the result to this file instead of stdout");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    std::size_t thin_n = 0;
    std::size_t thin_d = 0;
    auto* binary = app.add_subcommand("binary", "AR, LAR, RAR and sigma_AR from scores with default flags");
    binary->add_option("input", config.input, "CSV with a score column and a 0/1 default column")->required();
    binary->add_option("--score-col", config.score_col, "Score column name")->capture_default_str();
    binary->add_option("--default-col", config.default_col, "Default flag column name")->capture_default_str();
    binary->add_flag("--flip-scores", config.flip_scores, "Treat lower scores as better");
    auto* thin_n_opt = binary->add_option("--thin-n", thin_n, "Keep at most this many non-defaults");
    auto* thin_d_opt = binary->add_option("--thin-d", thin_d, "Keep at most this many defaults");
    binary->add_option("--seed", config.seed, "Seed for thinning")->capture_default_str();
    binary->add_flag("--emit-curves", config.emit_curves, "Include ROC and CAP polylines");
    add_output(binary);

    auto* imputed = app.add_subcommand("imputed", "Imputed AR, LAR, RAR from a grade,count,pd table");
    imputed->add_option("input", config.input, "Grade table CSV ordered by descending pd")->required();
    add_output(imputed);

    double ar = 0.0;
    double lar = 0.0;
    double rar = 0.0;
    auto* analyze = app.add_subcommand("analyze", "Triangle inversion, multipliers and trapezoid decomposition");
    auto* ar_opt = analyze->add_option("--ar", ar, "Accuracy ratio")->required();
    auto* lar_opt = analyze->add_option("--lar", lar, "Left-hand accuracy ratio")->required();
    auto* rar_opt = analyze->add_option("--rar", rar, "Right-hand accuracy ratio")->required();
    add_output(analyze);

    double k = 0.0;
    double burgt_ar_value = 0.0;
    std::string sweep;
    double tol = 0.0;
    auto* burgt = app.add_subcommand("burgt", "van der Burgt curve metrics and preference sweep");
    auto* k_opt = burgt->add_option("--k", k, "Curve parameter k > 0");
    auto* burgt_ar_opt = burgt->add_option("--ar", burgt_ar_value, "Target AR in (0,1)");
    auto* sweep_opt = burgt->add_option("--sweep", sweep, "AR grid lo:hi:step");
    auto* tol_opt = burgt->add_option("--tol", tol, "Absolute quadrature tolerance");
    add_output(burgt);

    double band = 0.0;
    auto* validate_cmd = app.add_subcommand("validate", "Compare a binary report with an imputed report");
    validate_cmd->add_option("--binary", config.binary_report, "Binary-data report JSON")->required();
    validate_cmd->add_option("--imputed", config.imputed_report, "Imputed report JSON")->required();
    validate_cmd->add_option("--z", config.z, "Confidence multiplier on sigma_AR")->capture_default_str();
    auto* band_opt = validate_cmd->add_option("--band", band, "LAR-RAR neutrality band (default sigma_AR)");
    add_output(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto* chosen = app.get_subcommands().front();
    config.subcommand = chosen->get_name();
    if (!format.empty()) {
        config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    }
    if (thin_n_opt->count() > 0) config.thin_n = thin_n;
    if (thin_d_opt->count() > 0) config.thin_d = thin_d;
    if (chosen == analyze) {
        if (ar_opt->count() > 0) config.ar = ar;
        if (lar_opt->count() > 0) config.lar = lar;
        if (rar_opt->count() > 0) config.rar = rar;
    }
    if (chosen == burgt) {
        if (k_opt->count() > 0) config.k = k;
        if (burgt_ar_opt->count() > 0) config.ar = burgt_ar_value;
        if (sweep_opt->count() > 0) config.sweep = sweep;
        if (tol_opt->count() > 0) config.tol = tol;
    }
    if (band_opt->count() > 0) config.band = band;

    try {
        std::string result;
        if (config.subcommand == "binary") {
            result = cmd_binary(config);
        } else if (config.subcommand == "imputed") {
            result = cmd_imputed(config);
        } else if (config.subcommand == "analyze") {
            result = cmd_analyze(config);
        } else if (config.subcommand == "burgt") {
            result = cmd_burgt(config);
        } else {
            result = cmd_validate(config);
        }
        if (config.out.empty()) {
            out << result;
        } else {
            std::ofstream file(config.out, std::ios::binary);
            file << result;
            if (!file) {
                throw InputError("cannot write '" + config.out + "'");
            }
        }
        return kExitOk;
    } catch (const InfeasibleMetric& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace scoremetrics::cli
