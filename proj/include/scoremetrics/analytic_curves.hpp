#pragma once

// Continuous ROC curves and the second-order metrics defined on them.
//
//   LAUC = ∫₀¹ [∫₀ᶜ R(x) dx] / [c·R(c)] dc
//   RAUC = ∫₀¹ [∫_f¹ (1 − R⁻¹(y)) dy] / [(1 − f)(1 − R⁻¹(f))] df
//   LAR = 2·LAUC − 1,  RAR = 2·RAUC − 1
//
// The quadrature routines here are the reference against which the discrete
// and imputed estimators are tested. The rest of the module covers the
// triangular limit curves, the LAR/RAR feasibility bounds, the traffic-light
// multipliers and trapezoid, and the van der Burgt family.

#include "scoremetrics/core.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace scoremetrics {

/// Two-segment ROC through (0,0), (a, a + d), (1,1); AR = d.
struct Triangular {
    double a = 0.0;
    double d = 0.0;
};

/// R(x) = (1 − e^{−kx}) / (1 − e^{−k}), k > 0.
struct Burgt {
    double k = 1.0;
};

/// Piecewise-linear ROC with cached partial integrals.
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(std::vector<Point> points);

    std::span<const Point> points() const noexcept { return points_; }

    double value(double x) const;
    double inverse(double y) const;
    double slope(double x) const;
    double area_below(double c) const;
    double excess_above(double x) const;

private:
    std::vector<Point> points_;
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> prefix_area_;  // ∫₀^{x_i} R
    std::vector<double> excess_;       // ∫_{x_i}^1 (R − y_i)
};

/// A continuous ROC curve on [0,1] with R(0) = 0, R(1) = 1, R nondecreasing.
///
/// Besides R and R⁻¹ every shape provides two partial integrals in closed form:
///   area_below(c)   = ∫₀ᶜ R(x) dx
///   excess_above(x) = ∫ₓ¹ (R(t) − R(x)) dt
/// Under the mirror map (y = 1 − R(x), Q = 1 − x) these two swap roles, which
/// is how mirrored curves without a closed-form mirror image are evaluated.
class CurveModel {
public:
    using Shape = std::variant<Triangular, Burgt, PiecewiseLinear>;

    static CurveModel triangular(double a, double d);
    static CurveModel burgt(double k);
    static CurveModel piecewise_linear(std::vector<Point> points);
    static CurveModel piecewise_linear(const RocPolyline& polyline);
    static CurveModel identity();

    const Shape& shape() const noexcept { return shape_; }
    /// True when this is the mirror image of `shape()` (used for shapes whose
    /// mirror leaves the family, such as Burgt).
    bool mirrored() const noexcept { return mirrored_; }

    double value(double x) const;
    double inverse(double y) const;
    /// R'(x); +inf on vertical segments.
    double slope(double x) const;
    double area_below(double c) const;
    double excess_above(double x) const;

    /// Interior abscissae where R has a kink, ascending.
    std::vector<double> x_breaks() const;
    /// Interior ordinates where R⁻¹ has a kink, ascending.
    std::vector<double> y_breaks() const;

    /// R = 0 on some interval (0, ε]: LAUC is undefined.
    bool has_zero_run() const;
    /// R⁻¹ = 1 on some interval [1 − ε, 1): RAUC is undefined.
    bool has_terminal_jump() const;
    /// Contains a vertical segment somewhere (R' unbounded on a set of
    /// positive y-measure).
    bool has_vertical_segment() const;

    /// Concave in the usual function sense (the ROC bulges above the
    /// diagonal), checked on chord slopes with a 1e−12 tolerance for
    /// piecewise-linear curves.
    bool is_convex_roc() const;

    /// Mirror image y = 1 − R(x), Q = 1 − x. Triangular(a,d) maps to
    /// Triangular(1 − a − d, d); piecewise-linear curves map vertex-wise;
    /// Burgt curves are flagged as mirrored.
    CurveModel mirror() const;

    /// Polyline approximation (exact for piecewise-linear shapes).
    std::vector<Point> sample(std::size_t segments) const;

private:
    CurveModel(Shape shape, bool mirrored) : shape_(std::move(shape)), mirrored_(mirrored) {}

    Shape shape_;
    bool mirrored_ = false;
};

/// 1e−9 for analytic families, 1e−7 for piecewise-linear curves.
double default_tolerance(const CurveModel& curve);

/// LAUC by adaptive quadrature to absolute error `tol`. Throws InputError for
/// degenerate curves and NumericalError if the tolerance is not reached.
double lauc_integral(const CurveModel& curve, double tol);
/// RAUC from its definition (integration over the ordinate f).
double rauc_integral(const CurveModel& curve, double tol);
/// RAUC from the change-of-variables form
///   ∫₀¹ [∫_c¹ (R(x) − R(c)) dx] / [(1 − c)(1 − R(c))] · R'(c) dc.
/// Requires a curve without vertical segments.
double rauc_integral_equivalent(const CurveModel& curve, double tol);

inline double lar_integral(const CurveModel& curve, double tol) { return 2.0 * lauc_integral(curve, tol) - 1.0; }
inline double rar_integral(const CurveModel& curve, double tol) { return 2.0 * rauc_integral(curve, tol) - 1.0; }
/// AR = 2·∫R − 1 from the closed-form area.
double ar_of(const CurveModel& curve);

/// Closed-form LAR of Triangular(a, d); requires 0 < d < 1, 0 < a < 1 − d.
double triangle_lar(double a, double d);
/// Closed-form RAR of Triangular(a, d); same domain as triangle_lar.
double triangle_rar(double a, double d);

struct MetricBounds {
    double min = 0.0;
    double max = 0.0;
};

/// Range of LAR and RAR over convex ROC curves with the given AR:
///   min = AR + (1 − AR)·ln(1 − AR),  max = −AR·ln(AR) / (1 − AR).
/// Defined for AR in (0,1); the limits at the ends are kBoundsAtZero / kBoundsAtOne.
MetricBounds lar_rar_bounds(double ar);
inline constexpr MetricBounds kBoundsAtZero{0.0, 0.0};
inline constexpr MetricBounds kBoundsAtOne{1.0, 1.0};

enum class Side { left, right };

/// The unique a in (0, 1 − ar) with triangle_lar(a, ar) (left) or
/// triangle_rar(a, ar) (right) equal to `metric_value`. Throws
/// InfeasibleMetric when the value is not strictly inside the bounds.
double solve_triangle_a(double metric_value, double ar, Side side);

/// Right-hand side of the unified multiplier equation,
///   s(μ) = x·ln x − (μ − 1 − AR)/(μ(1 − AR) − 1) · y·ln y,  x = AR/(μ − 1), y = AR·μ/(μ − 1),
/// valid for μ > 1/(1 − AR).
double unified_multiplier_metric(double mu, double ar);
/// Solves unified_multiplier_metric(μ, ar) = metric_value for μ by bisection.
double solve_unified_multiplier(double metric_value, double ar);

struct Multipliers {
    double a_lar = 0.0;
    double a_rar = 0.0;
    double mu_l = 0.0;
    double mu_r = 0.0;
    double mu_l_unified = 0.0;  ///< cross-check from the unified equation
    double mu_r_unified = 0.0;
    double discrepancy = 0.0;   ///< max |μ − μ_unified|
    std::vector<std::string> warnings;
};

/// μL = (a(LAR) + AR)/a(LAR), μR = (1 − a(RAR))/(1 − a(RAR) − AR), cross-checked
/// against the unified equation; a discrepancy above 1e−6 adds a warning.
Multipliers multipliers(double ar, double lar, double rar);

struct TrafficLightZone {
    std::string name;       ///< red, yellow, green
    double x_from = 0.0;
    double x_to = 0.0;
    double pd_multiplier = 1.0;  ///< asymptotic (PD → 0) factor on the portfolio PD
};

struct TrapezoidDecomposition {
    double ar = 0.0;
    double lar = 0.0;
    double rar = 0.0;
    Multipliers mult;
    double big_a = 0.0;          ///< A = AR·(1 + 1/(μL − 1) + 1/(μR − 1))
    double cap_a = 0.0;          ///< lower break a
    double cap_b = 0.0;          ///< upper break b
    double indifference = 0.0;   ///< I = sqrt(1 − A) = 1 − a − b
    Point vertex_low;            ///< (a, a·μL)
    Point vertex_high;           ///< (1 − b, 1 − b/μR)

    std::vector<Point> polyline() const;
    double area() const;
    std::vector<TrafficLightZone> zones() const;
};

/// Trapezoid with the same AUC whose middle segment runs parallel to the
/// diagonal. Throws DegenerateTrapezoid when A ≥ 1 (the curve is already
/// triangular and the indifference segment vanishes).
TrapezoidDecomposition trapezoid_decomposition(double ar, double lar, double rar);

/// AR(k) = 2·(1/(1 − e^{−k}) − 1/k − 1/2).
double burgt_ar(double k);
/// Inverse of burgt_ar by bisection to |AR(k) − ar| < 1e−12.
double burgt_k(double ar);

struct SweepRow {
    double ar = 0.0;
    double k = 0.0;
    double lar = 0.0;
    double rar = 0.0;
    double min_bound = 0.0;
    double max_bound = 0.0;
};

/// For each AR in the grid: k = burgt_k(AR), LAR/RAR by quadrature on
/// Burgt(k), and the convex-curve bounds.
std::vector<SweepRow> burgt_preference_sweep(std::span<const double> ar_grid, double tol);

} // namespace scoremetrics
