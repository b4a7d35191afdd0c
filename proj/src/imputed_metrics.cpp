#include "scoremetrics/imputed_metrics.hpp"

#include "scoremetrics/errors.hpp"

#include <cmath>
#include <sstream>

namespace scoremetrics {
namespace {

std::string describe_row(std::size_t index, const Grade& grade)
{
    std::ostringstream out;
    out << "grade row " << index + 1;
    if (!grade.label.empty()) {
        out << " ('" << grade.label << "')";
    }
    return out.str();
}

struct ImputedPoints {
    std::vector<double> g;
    std::vector<double> r;
};

ImputedPoints vertices(const GradeTable& table)
{
    ImputedPoints pts;
    pts.g.reserve(table.size() + 1);
    pts.r.reserve(table.size() + 1);
    pts.g.push_back(0.0);
    pts.r.push_back(0.0);
    // Running sums in the same order as the table totals, so the last vertex is exactly (1,1).
    double goods = 0.0;
    double bads = 0.0;
    for (const auto& grade : table.grades()) {
        goods += grade.count * (1.0 - grade.pd);
        bads += grade.count * grade.pd;
        pts.g.push_back(goods / table.expected_nondefaults());
        pts.r.push_back(bads / table.expected_defaults());
    }
    return pts;
}

} // namespace

GradeTable::GradeTable(std::vector<Grade> grades) : grades_(std::move(grades))
{
    if (grades_.empty()) {
        throw InputError("grade table is empty");
    }
    bool populated = false;
    for (std::size_t i = 0; i < grades_.size(); ++i) {
        const auto& grade = grades_[i];
        if (!std::isfinite(grade.count) || grade.count < 0.0) {
            throw InputError(describe_row(i, grade) + ": count must be a finite non-negative number");
        }
        if (!(grade.pd > 0.0 && grade.pd < 1.0)) {
            std::ostringstream msg;
            msg << describe_row(i, grade) << ": pd " << grade.pd << " must lie strictly inside (0,1)";
            throw InputError(msg.str());
        }
        if (i > 0 && grade.pd > grades_[i - 1].pd) {
            std::ostringstream msg;
            msg << describe_row(i, grade) << ": pd " << grade.pd << " exceeds the previous grade's pd "
                << grades_[i - 1].pd << "; grades must be ordered by descending pd";
            throw InputError(msg.str());
        }
        populated = populated || grade.count > 0.0;
        defaults_ += grade.count * grade.pd;
        nondefaults_ += grade.count * (1.0 - grade.pd);
    }
    if (!populated || !(defaults_ > 0.0) || !(nondefaults_ > 0.0)) {
        throw InputError("grade table has no populated grade");
    }
}

RocPolyline imputed_roc(const GradeTable& table)
{
    const auto pts = vertices(table);
    std::vector<Point> points;
    points.reserve(pts.g.size());
    for (std::size_t k = 0; k < pts.g.size(); ++k) {
        points.push_back({pts.g[k], pts.r[k]});
    }
    return RocPolyline(std::move(points), CurveKind::roc);
}

double ar_imputed(const GradeTable& table)
{
    return 2.0 * imputed_roc(table).area() - 1.0;
}

double lar_imputed(const GradeTable& table)
{
    const auto [g, r] = vertices(table);
    double area_so_far = 0.0;
    double lauc = 0.0;
    for (std::size_t k = 1; k < g.size(); ++k) {
        const double dg = g[k] - g[k - 1];
        area_so_far += 0.5 * (r[k] + r[k - 1]) * dg;
        const double denom = g[k] * r[k];
        if (denom != 0.0) {
            lauc += dg / denom * area_so_far;
        }
    }
    return 2.0 * lauc - 1.0;
}

double rar_imputed(const GradeTable& table)
{
    const auto [g, r] = vertices(table);
    const std::size_t n = g.size() - 1;
    // tail[k] = Σ_{s≥k} (1 − (g_s + g_{s−1})/2)·(R_s − R_{s−1})
    std::vector<double> tail(n + 2, 0.0);
    for (std::size_t s = n; s >= 1; --s) {
        tail[s] = tail[s + 1] + (1.0 - 0.5 * (g[s] + g[s - 1])) * (r[s] - r[s - 1]);
    }
    double rauc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double denom = (1.0 - g[k - 1]) * (1.0 - r[k - 1]);
        if (denom != 0.0) {
            rauc += (r[k] - r[k - 1]) / denom * tail[k];
        }
    }
    return 2.0 * rauc - 1.0;
}

MetricReport imputed_report(const GradeTable& table)
{
    MetricReport report;
    report.source = MetricSource::imputed;
    report.ar = ar_imputed(table);
    report.lar = lar_imputed(table);
    report.rar = rar_imputed(table);
    report.n_nondefault = table.expected_nondefaults();
    report.n_default = table.expected_defaults();
    return report;
}

} // namespace scoremetrics
