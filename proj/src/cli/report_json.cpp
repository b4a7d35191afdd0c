#include "scoremetrics/cli.hpp"

#include "scoremetrics/errors.hpp"

#include <charconv>
#include <cmath>

namespace scoremetrics::cli {
namespace {

Json number(double v)
{
    return Json(quantize(v));
}

Json optional_number(const std::optional<double>& v)
{
    return v ? number(*v) : Json(nullptr);
}

const Json& member(const Json& object, const char* key, const char* where)
{
    if (!object.is_object() || !object.contains(key)) {
        throw InputError(std::string("report is missing '") + where + key + "'");
    }
    return object.at(key);
}

double read_number(const Json& object, const char* key, const char* where)
{
    const auto& value = member(object, key, where);
    if (!value.is_number()) {
        throw InputError(std::string("report field '") + where + key + "' must be a number");
    }
    return value.get<double>();
}

std::optional<double> read_optional_number(const Json& object, const char* key, const char* where)
{
    const auto& value = member(object, key, where);
    if (value.is_null()) {
        return std::nullopt;
    }
    return read_number(object, key, where);
}

} // namespace

double quantize(double value)
{
    if (!std::isfinite(value) || value == 0.0) {
        return value;
    }
    char buffer[64];
    const auto written = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 12);
    double out = 0.0;
    std::from_chars(buffer, written.ptr, out);
    return out;
}

std::string format_number(double value)
{
    char buffer[64];
    const auto written = std::to_chars(buffer, buffer + sizeof buffer, quantize(value));
    return std::string(buffer, written.ptr);
}

Json points_to_json(std::span<const Point> points)
{
    Json out = Json::array();
    for (const auto& p : points) {
        out.push_back(Json::array({number(p.x), number(p.y)}));
    }
    return out;
}

Json report_to_json(const MetricReport& report)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["source"] = std::string(to_string(report.source));
    doc["metrics"] = {{"ar", number(report.ar)}, {"lar", number(report.lar)}, {"rar", number(report.rar)}};
    doc["sigma_ar"] = {{"exact", optional_number(report.sigma_ar)},
                       {"simplified", optional_number(report.sigma_ar_simplified)}};
    doc["counts"] = {{"n", number(report.n_nondefault)}, {"d", number(report.n_default)}};
    return doc;
}

MetricReport report_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        throw InputError("report must be a JSON object");
    }
    const auto& version = member(doc, "schema_version", "");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw InputError("unsupported schema_version " + version.dump() + "; expected " +
                         std::to_string(kSchemaVersion));
    }
    const auto& source = member(doc, "source", "");
    MetricReport report;
    if (source == "binary") {
        report.source = MetricSource::binary;
    } else if (source == "imputed") {
        report.source = MetricSource::imputed;
    } else {
        throw InputError("unknown report source " + source.dump());
    }
    const auto& metrics = member(doc, "metrics", "");
    report.ar = read_number(metrics, "ar", "metrics.");
    report.lar = read_number(metrics, "lar", "metrics.");
    report.rar = read_number(metrics, "rar", "metrics.");
    const auto& sigma = member(doc, "sigma_ar", "");
    report.sigma_ar = read_optional_number(sigma, "exact", "sigma_ar.");
    report.sigma_ar_simplified = read_optional_number(sigma, "simplified", "sigma_ar.");
    const auto& counts = member(doc, "counts", "");
    report.n_nondefault = read_number(counts, "n", "counts.");
    report.n_default = read_number(counts, "d", "counts.");
    return report;
}

Json decomposition_to_json(const TrapezoidDecomposition& t)
{
    Json zones = Json::array();
    for (const auto& zone : t.zones()) {
        zones.push_back({{"name", zone.name},
                         {"x_from", number(zone.x_from)},
                         {"x_to", number(zone.x_to)},
                         {"pd_multiplier", number(zone.pd_multiplier)}});
    }
    Json doc;
    doc["a_lar"] = number(t.mult.a_lar);
    doc["a_rar"] = number(t.mult.a_rar);
    doc["mu_l"] = number(t.mult.mu_l);
    doc["mu_r"] = number(t.mult.mu_r);
    doc["mu_l_unified"] = number(t.mult.mu_l_unified);
    doc["mu_r_unified"] = number(t.mult.mu_r_unified);
    doc["multiplier_discrepancy"] = number(t.mult.discrepancy);
    doc["big_a"] = number(t.big_a);
    doc["a"] = number(t.cap_a);
    doc["b"] = number(t.cap_b);
    doc["indifference"] = number(t.indifference);
    doc["vertices"] = points_to_json(t.polyline());
    doc["area"] = number(t.area());
    doc["zones"] = std::move(zones);
    doc["warnings"] = t.mult.warnings;
    return doc;
}

Json verdict_to_json(const ValidationVerdict& v)
{
    Json verdict;
    verdict["z"] = number(v.z);
    verdict["band"] = number(v.band);
    verdict["gini_consistent"] = v.gini_consistent;
    verdict["ar_gap"] = number(v.ar_gap);
    verdict["z_sigma"] = number(v.z * v.binary.sigma_ar.value_or(0.0));
    verdict["preference_binary"] = std::string(to_string(v.preference_binary));
    verdict["preference_imputed"] = std::string(to_string(v.preference_imputed));
    verdict["preference_consistent"] = v.preference_consistent;
    verdict["dominant_metric_gap"] = number(v.dominant_metric_gap);
    verdict["notes"] = v.notes;
    verdict["binary"] = report_to_json(v.binary);
    verdict["imputed"] = report_to_json(v.imputed);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["source"] = "validation";
    doc["verdict"] = std::move(verdict);
    return doc;
}

// nlohmann's float printer is not always shortest, so floating tokens are
// re-emitted through format_number to keep the 12-digit text form.
std::string dump(const Json& doc)
{
    const std::string raw = doc.dump(2);
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
        const char c = raw[i];
        if (c == '"') {
            const std::size_t start = i++;
            while (raw[i] != '"') i += raw[i] == '\\' ? 2 : 1;
            ++i;
            out.append(raw, start, i - start);
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            const std::size_t end = raw.find_first_of(",\n]} ", i);
            const std::string token = raw.substr(i, end - i);
            if (token.find_first_of(".eE") == std::string::npos) {
                out += token;
            } else {
                double value = 0.0;
                std::from_chars(token.data(), token.data() + token.size(), value);
                std::string text = format_number(value);
                if (text.find_first_of(".eE") == std::string::npos) text += ".0";
                out += text;
            }
            i = end;
        } else {
            out += c;
            ++i;
        }
    }
    return out + "\n";
}

} // namespace scoremetrics::cli
