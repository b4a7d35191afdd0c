#include "scoremetrics/analytic_curves.hpp"

#include "scoremetrics/errors.hpp"
#include "scoremetrics/quadrature.hpp"
#include "scoremetrics/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace scoremetrics {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// t + e^{-t} − 1, accurate for small t where the direct form cancels.
double exp_remainder(double t)
{
    if (t < 1.0) {
        double term = t * t / 2.0;
        double sum = 0.0;
        for (int n = 3; n < 40 && std::abs(term) > 1e-18 * std::abs(sum); ++n) {
            sum += term;
            term *= -t / n;
        }
        return sum;
    }
    return t + std::expm1(-t);
}

std::string fmt(double v)
{
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------------------
// Triangular

double value_of(const Triangular& t, double x)
{
    const double v = t.a + t.d;
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (x < t.a) return x * v / t.a;
    return v + (x - t.a) * (1.0 - v) / (1.0 - t.a);
}

double inverse_of(const Triangular& t, double y)
{
    const double v = t.a + t.d;
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    if (y < v) return y * t.a / v;
    return t.a + (y - v) * (1.0 - t.a) / (1.0 - v);
}

double slope_of(const Triangular& t, double x)
{
    const double v = t.a + t.d;
    if (x < t.a) return v / t.a;
    if (t.a == 0.0 && x <= 0.0 && t.d > 0.0) return kInf;
    return (1.0 - v) / (1.0 - t.a);
}

double area_below_of(const Triangular& t, double c)
{
    c = std::clamp(c, 0.0, 1.0);
    const double v = t.a + t.d;
    if (c <= t.a) return 0.5 * c * value_of(t, c);
    return 0.5 * t.a * v + 0.5 * (c - t.a) * (v + value_of(t, c));
}

double excess_above_of(const Triangular& t, double x)
{
    if (x >= 1.0) return 0.0;
    x = std::max(x, 0.0);
    const double v = t.a + t.d;
    const double upper_slope = t.a < 1.0 ? (1.0 - v) / (1.0 - t.a) : 0.0;
    if (x >= t.a) {
        return 0.5 * upper_slope * (1.0 - x) * (1.0 - x);
    }
    const double lower_slope = v / t.a;
    const double rx = value_of(t, x);
    return 0.5 * lower_slope * (t.a - x) * (t.a - x) + (v - rx) * (1.0 - t.a) +
           0.5 * upper_slope * (1.0 - t.a) * (1.0 - t.a);
}

std::vector<double> x_breaks_of(const Triangular& t)
{
    if (t.a > 0.0 && t.a < 1.0) return {t.a};
    return {};
}

std::vector<double> y_breaks_of(const Triangular& t)
{
    const double v = t.a + t.d;
    if (v > 0.0 && v < 1.0) return {v};
    return {};
}

bool zero_run_of(const Triangular&) { return false; }
bool terminal_jump_of(const Triangular&) { return false; }
bool vertical_of(const Triangular& t) { return t.a == 0.0 && t.d > 0.0; }
bool convex_of(const Triangular&) { return true; }

// ---------------------------------------------------------------------------
// Burgt

double burgt_norm(const Burgt& b) { return -std::expm1(-b.k); }

double value_of(const Burgt& b, double x)
{
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return -std::expm1(-b.k * x) / burgt_norm(b);
}

double inverse_of(const Burgt& b, double y)
{
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    return std::min(1.0, -std::log1p(-y * burgt_norm(b)) / b.k);
}

double slope_of(const Burgt& b, double x)
{
    return b.k * std::exp(-b.k * std::clamp(x, 0.0, 1.0)) / burgt_norm(b);
}

double area_below_of(const Burgt& b, double c)
{
    c = std::clamp(c, 0.0, 1.0);
    return exp_remainder(b.k * c) / (b.k * burgt_norm(b));
}

double excess_above_of(const Burgt& b, double x)
{
    x = std::clamp(x, 0.0, 1.0);
    return std::exp(-b.k * x) * exp_remainder(b.k * (1.0 - x)) / (b.k * burgt_norm(b));
}

std::vector<double> x_breaks_of(const Burgt&) { return {}; }
std::vector<double> y_breaks_of(const Burgt&) { return {}; }
bool zero_run_of(const Burgt&) { return false; }
bool terminal_jump_of(const Burgt&) { return false; }
bool vertical_of(const Burgt&) { return false; }
bool convex_of(const Burgt&) { return true; }

// ---------------------------------------------------------------------------
// PiecewiseLinear (members defined below)

double value_of(const PiecewiseLinear& p, double x) { return p.value(x); }
double inverse_of(const PiecewiseLinear& p, double y) { return p.inverse(y); }
double slope_of(const PiecewiseLinear& p, double x) { return p.slope(x); }
double area_below_of(const PiecewiseLinear& p, double c) { return p.area_below(c); }
double excess_above_of(const PiecewiseLinear& p, double x) { return p.excess_above(x); }

std::vector<double> interior(std::vector<double> values)
{
    std::erase_if(values, [](double v) { return !(v > 0.0 && v < 1.0); });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<double> x_breaks_of(const PiecewiseLinear& p)
{
    std::vector<double> xs;
    for (const auto& pt : p.points()) xs.push_back(pt.x);
    return interior(std::move(xs));
}

std::vector<double> y_breaks_of(const PiecewiseLinear& p)
{
    std::vector<double> ys;
    for (const auto& pt : p.points()) ys.push_back(pt.y);
    return interior(std::move(ys));
}

bool zero_run_of(const PiecewiseLinear& p)
{
    return std::any_of(p.points().begin(), p.points().end(), [](const Point& pt) { return pt.x > 0.0 && pt.y == 0.0; });
}

bool terminal_jump_of(const PiecewiseLinear& p)
{
    return std::any_of(p.points().begin(), p.points().end(), [](const Point& pt) { return pt.x == 1.0 && pt.y < 1.0; });
}

bool vertical_of(const PiecewiseLinear& p)
{
    const auto pts = p.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x == pts[i - 1].x && pts[i].y > pts[i - 1].y) return true;
    }
    return false;
}

bool convex_of(const PiecewiseLinear& p)
{
    constexpr double kTolerance = 1e-12;
    const auto pts = p.points();
    Point prev{0.0, 0.0};
    bool have_prev = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Point seg{pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y};
        if (seg.x == 0.0 && seg.y == 0.0) continue;
        // A concave (upward-bulging) chain only ever turns clockwise.
        if (have_prev && prev.x * seg.y - prev.y * seg.x > kTolerance) return false;
        prev = seg;
        have_prev = true;
    }
    return true;
}

std::vector<double> flipped(const std::vector<double>& values)
{
    std::vector<double> out;
    out.reserve(values.size());
    for (auto it = values.rbegin(); it != values.rend(); ++it) out.push_back(1.0 - *it);
    return out;
}

void require_tolerance(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InputError("quadrature tolerance must be positive, got " + fmt(tol));
    }
}

std::vector<double> with_ends(std::vector<double> interior_breaks)
{
    interior_breaks.insert(interior_breaks.begin(), 0.0);
    interior_breaks.push_back(1.0);
    return interior_breaks;
}

template <class F>
double checked_integral(const F& integrand, const std::vector<double>& breaks, double tol, const char* what)
{
    const auto result = integrate(integrand, std::span<const double>(breaks), tol);
    if (!result.converged) {
        throw NumericalError(std::string(what) + ": quadrature did not reach tolerance " + fmt(tol) +
                             " (estimate " + fmt(result.abs_error) + ")");
    }
    return result.value;
}

void require_open_unit(double v, const char* what)
{
    if (!(v > 0.0 && v < 1.0)) {
        throw InputError(std::string(what) + " must lie in (0,1), got " + fmt(v));
    }
}

} // namespace

// ---------------------------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<Point> points)
{
    // Reuse the polyline validation (endpoints, monotonicity, finiteness).
    RocPolyline checked(std::move(points), CurveKind::roc);
    points_.assign(checked.points().begin(), checked.points().end());

    const std::size_t n = points_.size();
    xs_.resize(n);
    ys_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs_[i] = points_[i].x;
        ys_[i] = points_[i].y;
    }
    prefix_area_.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        prefix_area_[i] = prefix_area_[i - 1] + 0.5 * (ys_[i] + ys_[i - 1]) * (xs_[i] - xs_[i - 1]);
    }
    excess_.assign(n, 0.0);
    for (std::size_t m = n - 1; m-- > 0;) {
        const double rise = ys_[m + 1] - ys_[m];
        excess_[m] = excess_[m + 1] + rise * (1.0 - xs_[m + 1]) + 0.5 * (xs_[m + 1] - xs_[m]) * rise;
    }
}

double PiecewiseLinear::value(double x) const
{
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const auto idx = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    const std::size_t j = idx - 1;
    if (xs_[j] == x) return ys_[j];
    const double t = (x - xs_[j]) / (xs_[idx] - xs_[j]);
    return ys_[j] + t * (ys_[idx] - ys_[j]);
}

double PiecewiseLinear::inverse(double y) const
{
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    const auto i = static_cast<std::size_t>(std::lower_bound(ys_.begin(), ys_.end(), y) - ys_.begin());
    if (ys_[i] == y) return xs_[i];
    const double t = (y - ys_[i - 1]) / (ys_[i] - ys_[i - 1]);
    return xs_[i - 1] + t * (xs_[i] - xs_[i - 1]);
}

double PiecewiseLinear::slope(double x) const
{
    x = std::clamp(x, 0.0, 1.0);
    auto idx = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    if (idx == xs_.size()) {
        // x == 1: use the last segment of positive width.
        idx = xs_.size() - 1;
        while (idx > 0 && xs_[idx - 1] == xs_[idx]) --idx;
    }
    const std::size_t j = idx - 1;
    if (x == 0.0 && j > 0) return kInf;  // vertical run at the origin
    return (ys_[idx] - ys_[j]) / (xs_[idx] - xs_[j]);
}

double PiecewiseLinear::area_below(double c) const
{
    if (c <= 0.0) return 0.0;
    if (c >= 1.0) return prefix_area_.back();
    const auto idx = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), c) - xs_.begin());
    const std::size_t j = idx - 1;
    return prefix_area_[j] + 0.5 * (c - xs_[j]) * (ys_[j] + value(c));
}

double PiecewiseLinear::excess_above(double x) const
{
    if (x >= 1.0) return 0.0;
    x = std::max(x, 0.0);
    const auto idx = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    const std::size_t j = idx - 1;
    const double rx = value(x);
    // Segment value at x; differs from R(x) only on a vertical run at the origin.
    const double seg = ys_[j] + (x - xs_[j]) / (xs_[idx] - xs_[j]) * (ys_[idx] - ys_[j]);
    return (xs_[idx] - x) * (0.5 * (seg + ys_[idx]) - rx) + (ys_[idx] - rx) * (1.0 - xs_[idx]) + excess_[idx];
}

// ---------------------------------------------------------------------------

CurveModel CurveModel::triangular(double a, double d)
{
    if (!(d >= 0.0 && d <= 1.0)) {
        throw InputError("triangular curve: d must lie in [0,1], got " + fmt(d));
    }
    if (!(a >= 0.0 && a + d <= 1.0)) {
        throw InputError("triangular curve: a must lie in [0, 1 - d], got a = " + fmt(a) + ", d = " + fmt(d));
    }
    return CurveModel(Triangular{a, d}, false);
}

CurveModel CurveModel::burgt(double k)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw InputError("van der Burgt curve: k must be positive and finite, got " + fmt(k));
    }
    return CurveModel(Burgt{k}, false);
}

CurveModel CurveModel::piecewise_linear(std::vector<Point> points)
{
    return CurveModel(PiecewiseLinear(std::move(points)), false);
}

CurveModel CurveModel::piecewise_linear(const RocPolyline& polyline)
{
    return piecewise_linear(std::vector<Point>(polyline.points().begin(), polyline.points().end()));
}

CurveModel CurveModel::identity()
{
    return piecewise_linear(std::vector<Point>{{0.0, 0.0}, {1.0, 1.0}});
}

double CurveModel::value(double x) const
{
    return std::visit(
        [&](const auto& s) { return mirrored_ ? 1.0 - inverse_of(s, 1.0 - x) : value_of(s, x); }, shape_);
}

double CurveModel::inverse(double y) const
{
    return std::visit(
        [&](const auto& s) { return mirrored_ ? 1.0 - value_of(s, 1.0 - y) : inverse_of(s, y); }, shape_);
}

double CurveModel::slope(double x) const
{
    return std::visit(
        [&](const auto& s) {
            if (!mirrored_) return slope_of(s, x);
            const double base = slope_of(s, inverse_of(s, 1.0 - x));
            return base == 0.0 ? kInf : 1.0 / base;
        },
        shape_);
}

double CurveModel::area_below(double c) const
{
    return std::visit(
        [&](const auto& s) {
            return mirrored_ ? excess_above_of(s, inverse_of(s, 1.0 - c)) : area_below_of(s, c);
        },
        shape_);
}

double CurveModel::excess_above(double x) const
{
    return std::visit(
        [&](const auto& s) {
            return mirrored_ ? area_below_of(s, inverse_of(s, 1.0 - x)) : excess_above_of(s, x);
        },
        shape_);
}

std::vector<double> CurveModel::x_breaks() const
{
    return std::visit([&](const auto& s) { return mirrored_ ? flipped(y_breaks_of(s)) : x_breaks_of(s); }, shape_);
}

std::vector<double> CurveModel::y_breaks() const
{
    return std::visit([&](const auto& s) { return mirrored_ ? flipped(x_breaks_of(s)) : y_breaks_of(s); }, shape_);
}

bool CurveModel::has_zero_run() const
{
    return std::visit([&](const auto& s) { return mirrored_ ? terminal_jump_of(s) : zero_run_of(s); }, shape_);
}

bool CurveModel::has_terminal_jump() const
{
    return std::visit([&](const auto& s) { return mirrored_ ? zero_run_of(s) : terminal_jump_of(s); }, shape_);
}

bool CurveModel::has_vertical_segment() const
{
    // Only Burgt curves are ever flagged as mirrored and they have no flat runs.
    return !mirrored_ && std::visit([](const auto& s) { return vertical_of(s); }, shape_);
}

bool CurveModel::is_convex_roc() const
{
    return std::visit([](const auto& s) { return convex_of(s); }, shape_);
}

CurveModel CurveModel::mirror() const
{
    if (const auto* t = std::get_if<Triangular>(&shape_)) {
        return CurveModel(Triangular{1.0 - t->a - t->d, t->d}, false);
    }
    if (const auto* p = std::get_if<PiecewiseLinear>(&shape_)) {
        const auto pts = p->points();
        std::vector<Point> out;
        out.reserve(pts.size());
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            out.push_back({1.0 - it->y, 1.0 - it->x});
        }
        return CurveModel(PiecewiseLinear(std::move(out)), false);
    }
    return CurveModel(shape_, !mirrored_);
}

std::vector<Point> CurveModel::sample(std::size_t segments) const
{
    if (const auto* p = std::get_if<PiecewiseLinear>(&shape_); p && !mirrored_) {
        return {p->points().begin(), p->points().end()};
    }
    segments = std::max<std::size_t>(segments, 1);
    std::vector<double> xs;
    for (std::size_t i = 0; i <= segments; ++i) {
        xs.push_back(static_cast<double>(i) / static_cast<double>(segments));
    }
    const auto kinks = x_breaks();
    xs.insert(xs.end(), kinks.begin(), kinks.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Point> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back({x, value(x)});
    }
    return out;
}

// ---------------------------------------------------------------------------

double default_tolerance(const CurveModel& curve)
{
    return std::holds_alternative<PiecewiseLinear>(curve.shape()) ? 1e-7 : 1e-9;
}

double lauc_integral(const CurveModel& curve, double tol)
{
    require_tolerance(tol);
    if (curve.has_zero_run()) {
        throw InputError("degenerate curve: R(c) = 0 on an interval next to the origin, LAUC is undefined");
    }
    auto integrand = [&](double c) {
        const double den = c * curve.value(c);
        // Only reachable through underflow; the limit for a finite slope at 0 is 1/2.
        if (!(den > 0.0)) return 0.5;
        return curve.area_below(c) / den;
    };
    return checked_integral(integrand, with_ends(curve.x_breaks()), tol, "LAUC");
}

double rauc_integral(const CurveModel& curve, double tol)
{
    require_tolerance(tol);
    if (curve.has_terminal_jump()) {
        throw InputError("degenerate curve: R^-1(f) = 1 on an interval next to f = 1, RAUC is undefined");
    }
    const bool jumps = curve.has_vertical_segment();
    auto integrand = [&](double f) {
        const double x = curve.inverse(f);
        const double den = (1.0 - f) * (1.0 - x);
        if (!(den > 0.0)) return 0.5;
        // ∫_x^1 (R(t) − f) dt; R(x) exceeds f only on a vertical run.
        double numerator = curve.excess_above(x);
        if (jumps) numerator += std::max(0.0, curve.value(x) - f) * (1.0 - x);
        return numerator / den;
    };
    return checked_integral(integrand, with_ends(curve.y_breaks()), tol, "RAUC");
}

double rauc_integral_equivalent(const CurveModel& curve, double tol)
{
    require_tolerance(tol);
    if (curve.has_vertical_segment() || curve.has_terminal_jump()) {
        throw InputError("the change-of-variables RAUC form needs a curve without vertical segments");
    }
    auto integrand = [&](double c) {
        const double slope = curve.slope(c);
        if (slope == 0.0) return 0.0;
        const double den = (1.0 - c) * (1.0 - curve.value(c));
        if (!(den > 0.0)) return 0.5 * slope;
        return curve.excess_above(c) / den * slope;
    };
    return checked_integral(integrand, with_ends(curve.x_breaks()), tol, "RAUC (equivalent form)");
}

double ar_of(const CurveModel& curve)
{
    return 2.0 * curve.area_below(1.0) - 1.0;
}

// ---------------------------------------------------------------------------

namespace {

void require_triangle_domain(double a, double d)
{
    if (!(d > 0.0 && d < 1.0) || !(a > 0.0 && a < 1.0 - d)) {
        throw InputError("triangle metrics need 0 < d < 1 and 0 < a < 1 - d, got a = " + fmt(a) + ", d = " + fmt(d));
    }
}

} // namespace

double triangle_lar(double a, double d)
{
    require_triangle_domain(a, d);
    const double gap = (1.0 - d) - a;  // 1 − a − d
    // (1−a)/(1−a−d)·(a+d)·ln(a+d) with ln(a+d) = log1p(−gap)
    return a * std::log(a) - (1.0 - a) * (a + d) * std::log1p(-gap) / gap;
}

double triangle_rar(double a, double d)
{
    require_triangle_domain(a, d);
    const double gap = (1.0 - d) - a;
    return gap * std::log(gap) - (a + d) * (1.0 - a) * std::log1p(-a) / a;
}

MetricBounds lar_rar_bounds(double ar)
{
    require_open_unit(ar, "AR");
    return {ar + (1.0 - ar) * std::log1p(-ar), -ar * std::log(ar) / (1.0 - ar)};
}

double solve_triangle_a(double metric_value, double ar, Side side)
{
    const auto bounds = lar_rar_bounds(ar);
    const char* name = side == Side::left ? "LAR" : "RAR";
    if (!(metric_value > bounds.min && metric_value < bounds.max)) {
        throw InfeasibleMetric(std::string(name) + " = " + fmt(metric_value) + " is outside the feasible range (" +
                               fmt(bounds.min) + ", " + fmt(bounds.max) + ") for AR = " + fmt(ar));
    }
    const auto residual = [&](double a) {
        return (side == Side::left ? triangle_lar(a, ar) : triangle_rar(a, ar)) - metric_value;
    };
    // LAR falls and RAR rises as the apex moves right.
    const auto root = bisect(residual, 0.0, 1.0 - ar, side == Side::right);
    if (std::abs(root.residual) >= 1e-10) {
        throw NumericalError(std::string("triangle inversion for ") + name + " stalled with residual " +
                             fmt(root.residual));
    }
    return root.root;
}

double unified_multiplier_metric(double mu, double ar)
{
    require_open_unit(ar, "AR");
    if (!(mu > 1.0 / (1.0 - ar))) {
        throw InputError("multiplier must exceed 1/(1 - AR) = " + fmt(1.0 / (1.0 - ar)) + ", got " + fmt(mu));
    }
    const double x = ar / (mu - 1.0);
    const double y = ar * mu / (mu - 1.0);
    const double ratio = (mu - 1.0 - ar) / (mu * (1.0 - ar) - 1.0);
    return x * std::log(x) - ratio * y * std::log(y);
}

double solve_unified_multiplier(double metric_value, double ar)
{
    const auto bounds = lar_rar_bounds(ar);
    if (!(metric_value > bounds.min && metric_value < bounds.max)) {
        throw InfeasibleMetric("metric " + fmt(metric_value) + " is outside the feasible range (" + fmt(bounds.min) +
                               ", " + fmt(bounds.max) + ") for AR = " + fmt(ar));
    }
    const double lo = 1.0 / (1.0 - ar);
    double hi = 1e6;
    while (unified_multiplier_metric(hi, ar) < metric_value && hi < 1e300) {
        hi *= 1e3;
    }
    const auto root = bisect([&](double mu) { return unified_multiplier_metric(mu, ar) - metric_value; }, lo, hi,
                             true);
    if (std::abs(root.residual) >= 1e-9) {
        throw NumericalError("unified multiplier equation stalled with residual " + fmt(root.residual));
    }
    return root.root;
}

Multipliers multipliers(double ar, double lar, double rar)
{
    Multipliers m;
    m.a_lar = solve_triangle_a(lar, ar, Side::left);
    m.a_rar = solve_triangle_a(rar, ar, Side::right);
    m.mu_l = (m.a_lar + ar) / m.a_lar;
    m.mu_r = (1.0 - m.a_rar) / (1.0 - m.a_rar - ar);
    try {
        m.mu_l_unified = solve_unified_multiplier(lar, ar);
        m.mu_r_unified = solve_unified_multiplier(rar, ar);
        m.discrepancy = std::max(std::abs(m.mu_l - m.mu_l_unified), std::abs(m.mu_r - m.mu_r_unified));
        if (m.discrepancy > 1e-6) {
            m.warnings.push_back("multiplier cross-check differs by " + fmt(m.discrepancy));
        }
    } catch (const NumericalError& e) {
        m.mu_l_unified = m.mu_l;
        m.mu_r_unified = m.mu_r;
        m.warnings.push_back(std::string("multiplier cross-check unavailable: ") + e.what());
    }
    return m;
}

std::vector<Point> TrapezoidDecomposition::polyline() const
{
    return {{0.0, 0.0}, vertex_low, vertex_high, {1.0, 1.0}};
}

double TrapezoidDecomposition::area() const
{
    const auto pts = polyline();
    double sum = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        sum += 0.5 * (pts[i].y + pts[i - 1].y) * (pts[i].x - pts[i - 1].x);
    }
    return sum;
}

std::vector<TrafficLightZone> TrapezoidDecomposition::zones() const
{
    return {
        {"red", 0.0, mult.a_lar, mult.mu_l},
        {"yellow", mult.a_lar, mult.a_rar, 1.0},
        {"green", mult.a_rar, 1.0, 1.0 / mult.mu_r},
    };
}

TrapezoidDecomposition trapezoid_decomposition(double ar, double lar, double rar)
{
    constexpr double kVanishingSegment = 1e-12;
    TrapezoidDecomposition t;
    t.ar = ar;
    t.lar = lar;
    t.rar = rar;
    t.mult = multipliers(ar, lar, rar);
    t.big_a = ar * (1.0 + 1.0 / (t.mult.mu_l - 1.0) + 1.0 / (t.mult.mu_r - 1.0));
    if (1.0 - t.big_a <= kVanishingSegment) {
        throw DegenerateTrapezoid("A = " + fmt(t.big_a) +
                                  " >= 1: 1/(mu_L - 1) + 1/(mu_R - 1) >= (1 - AR)/AR, the indifference segment "
                                  "vanishes and the curve is triangular (a(LAR) = " +
                                  fmt(t.mult.a_lar) + ", a(RAR) = " + fmt(t.mult.a_rar) + ")");
    }
    t.indifference = std::sqrt(1.0 - t.big_a);
    t.cap_a = t.mult.a_lar / (1.0 + t.indifference);
    t.cap_b = (1.0 - t.mult.a_rar) / (1.0 + t.indifference);
    t.vertex_low = {t.cap_a, t.cap_a * t.mult.mu_l};
    t.vertex_high = {1.0 - t.cap_b, 1.0 - t.cap_b / t.mult.mu_r};
    return t;
}

// ---------------------------------------------------------------------------

double burgt_ar(double k)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw InputError("van der Burgt k must be positive and finite, got " + fmt(k));
    }
    if (k < 0.05) {
        const double k2 = k * k;
        return k * (1.0 / 6.0 + k2 * (-1.0 / 360.0 + k2 * (1.0 / 15120.0 + k2 * (-1.0 / 604800.0 + k2 / 23950080.0))));
    }
    // 1/(1 − e^{−k}) − 1/k = (k + e^{−k} − 1) / (k·(1 − e^{−k}))
    const double g = exp_remainder(k) / (k * -std::expm1(-k));
    return 2.0 * g - 1.0;
}

double burgt_k(double ar)
{
    require_open_unit(ar, "AR");
    double lo = 1e-6;
    double hi = 50.0;
    while (burgt_ar(lo) > ar && lo > 1e-300) lo *= 1e-3;
    while (burgt_ar(hi) < ar && hi < 1e300) hi *= 2.0;
    const auto root = bisect([&](double k) { return burgt_ar(k) - ar; }, lo, hi, true);
    if (std::abs(root.residual) >= 1e-12) {
        throw NumericalError("van der Burgt inversion stalled with residual " + fmt(root.residual));
    }
    return root.root;
}

std::vector<SweepRow> burgt_preference_sweep(std::span<const double> ar_grid, double tol)
{
    std::vector<SweepRow> rows;
    rows.reserve(ar_grid.size());
    for (double ar : ar_grid) {
        const auto bounds = lar_rar_bounds(ar);
        SweepRow row;
        row.ar = ar;
        row.k = burgt_k(ar);
        const auto curve = CurveModel::burgt(row.k);
        row.lar = lar_integral(curve, tol);
        row.rar = rar_integral(curve, tol);
        row.min_bound = bounds.min;
        row.max_bound = bounds.max;
        rows.push_back(row);
    }
    return rows;
}

} // namespace scoremetrics
