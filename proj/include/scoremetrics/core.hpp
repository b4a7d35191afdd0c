#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace scoremetrics {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class CurveKind { roc, cap };

/// Piecewise-linear ROC or CAP curve from (0,0) to (1,1) with nondecreasing
/// coordinates. Vertical and horizontal segments are allowed.
class RocPolyline {
public:
    RocPolyline(std::vector<Point> points, CurveKind kind);

    std::span<const Point> points() const noexcept { return points_; }
    CurveKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return points_.size(); }

    /// Trapezoid-rule area under the polyline (exact for piecewise-linear curves).
    double area() const noexcept;

private:
    std::vector<Point> points_;
    CurveKind kind_;
};

enum class MetricSource { binary, imputed };

std::string_view to_string(MetricSource source) noexcept;
std::string_view to_string(CurveKind kind) noexcept;

/// First- and second-order accuracy of one model from one data source.
///
/// Counts are the non-default / default populations behind the numbers: exact
/// integers for binary data, expected (possibly fractional) masses for imputed
/// grade tables. `sigma_ar` is empty when the standard-deviation bound does not
/// apply (imputed source, or a negative radicand for strongly inverted models).
struct MetricReport {
    double ar = 0.0;
    double lar = 0.0;
    double rar = 0.0;
    std::optional<double> sigma_ar;
    std::optional<double> sigma_ar_simplified;
    double n_nondefault = 0.0;
    double n_default = 0.0;
    MetricSource source = MetricSource::binary;

    friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

} // namespace scoremetrics
