#include "scoremetrics/cli.hpp"

#include "scoremetrics/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>

namespace scoremetrics::cli {
namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string at_line(std::size_t line, const std::string& message)
{
    return "line " + std::to_string(line) + ": " + message;
}

class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Next non-blank record; false at end of input.
    bool next(std::vector<std::string>& fields)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (line_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
                line.erase(0, 3);
            }
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (trim(line).empty()) {
                continue;
            }
            fields = split_csv_line(line);
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::size_t column_index(const std::vector<std::string>& header, const std::string& name)
{
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        std::string known;
        for (const auto& h : header) {
            known += known.empty() ? h : ", " + h;
        }
        throw InputError("column '" + name + "' not found in header (columns: " + known + ")");
    }
    return static_cast<std::size_t>(it - header.begin());
}

std::vector<std::string> read_header(CsvReader& reader)
{
    std::vector<std::string> header;
    if (!reader.next(header)) {
        throw InputError("input is empty; a header row is required");
    }
    return header;
}

const std::string& field(const std::vector<std::string>& row, std::size_t index, std::size_t line,
                         const std::string& name)
{
    if (index >= row.size() || row[index].empty()) {
        throw InputError(at_line(line, "missing value for '" + name + "'"));
    }
    return row[index];
}

double finite_field(const std::vector<std::string>& row, std::size_t index, std::size_t line,
                    const std::string& name)
{
    const auto& text = field(row, index, line, name);
    const auto value = parse_number(text);
    if (!value) {
        throw InputError(at_line(line, "'" + name + "' value '" + text + "' is not a number"));
    }
    if (!std::isfinite(*value)) {
        throw InputError(at_line(line, "'" + name + "' value '" + text + "' is not finite"));
    }
    return *value;
}

} // namespace

std::optional<double> parse_number(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.emplace_back(trim(current));
    return fields;
}

ScoreSample read_binary_csv(std::istream& in, const std::string& score_col, const std::string& default_col,
                            bool flip_scores)
{
    CsvReader reader(in);
    const auto header = read_header(reader);
    const auto score_at = column_index(header, score_col);
    const auto flag_at = column_index(header, default_col);

    std::vector<double> goods;
    std::vector<double> bads;
    std::vector<std::string> row;
    while (reader.next(row)) {
        const double score = finite_field(row, score_at, reader.line(), score_col);
        const auto flag = lower(field(row, flag_at, reader.line(), default_col));
        const double signed_score = flip_scores ? -score : score;
        if (flag == "1" || flag == "true") {
            bads.push_back(signed_score);
        } else if (flag == "0" || flag == "false") {
            goods.push_back(signed_score);
        } else {
            throw InputError(at_line(reader.line(), "'" + default_col + "' must be one of 0, 1, true, false; got '" +
                                                        row[flag_at] + "'"));
        }
    }
    if (bads.empty()) {
        throw InputError("degenerate sample: no defaults");
    }
    if (goods.empty()) {
        throw InputError("degenerate sample: no non-defaults");
    }
    return ScoreSample(std::move(goods), std::move(bads));
}

GradeTable read_grade_csv(std::istream& in)
{
    CsvReader reader(in);
    const auto header = read_header(reader);
    const auto grade_at = column_index(header, "grade");
    const auto count_at = column_index(header, "count");
    const auto pd_at = column_index(header, "pd");

    std::vector<Grade> grades;
    std::vector<std::string> row;
    while (reader.next(row)) {
        Grade g;
        g.label = grade_at < row.size() ? row[grade_at] : std::string();
        g.count = finite_field(row, count_at, reader.line(), "count");
        g.pd = finite_field(row, pd_at, reader.line(), "pd");
        grades.push_back(std::move(g));
    }
    return GradeTable(std::move(grades));
}

} // namespace scoremetrics::cli
