#include "scoremetrics/core.hpp"

#include "scoremetrics/errors.hpp"

#include <cmath>
#include <string>

namespace scoremetrics {

RocPolyline::RocPolyline(std::vector<Point> points, CurveKind kind)
    : points_(std::move(points)), kind_(kind)
{
    if (points_.size() < 2) {
        throw InputError("polyline needs at least two points");
    }
    if (points_.front() != Point{0.0, 0.0} || points_.back() != Point{1.0, 1.0}) {
        throw InputError("polyline must start at (0,0) and end at (1,1)");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const Point& p = points_[i - 1];
        const Point& q = points_[i];
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
            throw InputError("polyline point " + std::to_string(i) + " is not finite");
        }
        if (q.x < p.x || q.y < p.y) {
            throw InputError("polyline coordinates must be nondecreasing (point " + std::to_string(i) + ")");
        }
    }
}

double RocPolyline::area() const noexcept
{
    double sum = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        sum += 0.5 * (points_[i].y + points_[i - 1].y) * (points_[i].x - points_[i - 1].x);
    }
    return sum;
}

std::string_view to_string(MetricSource source) noexcept
{
    return source == MetricSource::binary ? "binary" : "imputed";
}

std::string_view to_string(CurveKind kind) noexcept
{
    return kind == CurveKind::roc ? "roc" : "cap";
}

} // namespace scoremetrics
