// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "scoremetrics/analytic_curves.hpp"
#include "scoremetrics/cli.hpp"
#include "scoremetrics/empirical_metrics.hpp"
#include "scoremetrics/errors.hpp"
#include "scoremetrics/imputed_metrics.hpp"
#include "support/test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace scoremetrics;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string num(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Feasible (AR, LAR, RAR) triples that admit a trapezoid, drawn strictly inside the bounds.
std::vector<std::array<double, 3>> feasible_triples(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::vector<std::array<double, 3>> out;
    while (static_cast<int>(out.size()) < count) {
        const double ar = u(rng);
        const auto b = lar_rar_bounds(ar);
        const double lar = b.min + (b.max - b.min) * u(rng);
        const double rar = b.min + (b.max - b.min) * u(rng);
        try {
            trapezoid_decomposition(ar, lar, rar);
            out.push_back({ar, lar, rar});
        } catch (const DegenerateTrapezoid&) {
        }
    }
    return out;
}

Check analyze_golden()
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    const char* argv[] = {"scoremetrics", "analyze", "--ar", "0.667", "--lar", "0.53", "--rar", "0.486"};
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(8, argv, out, err);
    const double elapsed = seconds_since(start);
    c.require(code == 0, "analyze exited with " + std::to_string(code) + ": " + err.str());
    if (!c.ok) return c;
    const auto doc = cli::Json::parse(out.str());
    const double a_lar = doc["decomposition"]["a_lar"].get<double>();
    const double a_rar = doc["decomposition"]["a_rar"].get<double>();
    c.require(std::abs(a_lar - 0.116) <= 0.002, "a(LAR) = " + num(a_lar));
    c.require(std::abs(a_rar - 0.185) <= 0.002, "a(RAR) = " + num(a_rar));
    c.require(elapsed < 1.0, "runtime " + num(elapsed) + " s");
    c.detail = c.ok ? "a(LAR) = " + num(a_lar) + ", a(RAR) = " + num(a_rar) + ", " + num(elapsed) + " s" : c.detail;
    return c;
}

Check triangle_round_trip()
{
    Check c;
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
        const double d = i / 21.0;
        for (int j = 1; j <= 20; ++j) {
            const double a = (1.0 - d) * j / 21.0;
            worst = std::max(worst, std::abs(solve_triangle_a(triangle_lar(a, d), d, Side::left) - a));
            worst = std::max(worst, std::abs(solve_triangle_a(triangle_rar(a, d), d, Side::right) - a));
        }
    }
    c.require(worst < 1e-8, "max |a' - a| = " + num(worst));
    if (c.ok) c.detail = "max |a' - a| = " + num(worst);
    return c;
}

Check bound_attainment()
{
    Check c;
    double worst = 0.0;
    for (double d : {0.2, 0.5, 0.8}) {
        const auto b = lar_rar_bounds(d);
        const double hi = lar_integral(CurveModel::triangular(1e-6, d), 1e-10);
        const double lo = lar_integral(CurveModel::triangular(1.0 - d - 1e-6, d), 1e-10);
        worst = std::max({worst, std::abs(hi - b.max), std::abs(lo - b.min)});
    }
    c.require(worst < 1e-3, "max deviation " + num(worst));
    if (c.ok) c.detail = "max deviation from the bounds " + num(worst);
    return c;
}

Check random_model_zero()
{
    Check c;
    const auto id = CurveModel::identity();
    const double lar = lar_integral(id, 1e-10);
    const double rar = rar_integral(id, 1e-10);
    c.require(std::abs(lar) < 1e-8 && std::abs(rar) < 1e-8, "identity LAR/RAR " + num(lar) + "/" + num(rar));

    std::mt19937_64 rng(2024);
    std::normal_distribution<double> z;
    std::vector<double> goods(10000);
    std::vector<double> bads(10000);
    for (auto& g : goods) g = z(rng);
    for (auto& b : bads) b = z(rng);
    const ScoreSample s(goods, bads);
    const double ar = ar_mann_whitney(s).ar;
    const double dl = lar_discrete(s);
    const double dr = rar_discrete(s);
    c.require(std::abs(ar) < 0.04 && std::abs(dl) < 0.04 && std::abs(dr) < 0.04,
              "discrete AR/LAR/RAR " + num(ar) + "/" + num(dl) + "/" + num(dr));
    if (c.ok) c.detail = "discrete AR/LAR/RAR = " + num(ar) + "/" + num(dl) + "/" + num(dr);
    return c;
}

Check mirror_duality()
{
    Check c;
    std::vector<CurveModel> curves{CurveModel::triangular(0.15, 0.6), CurveModel::burgt(5.0)};
    std::mt19937_64 rng(55);
    for (int i = 0; i < 10; ++i) {
        curves.push_back(CurveModel::piecewise_linear(testsupport::random_convex_polyline(rng)));
    }
    double worst = 0.0;
    for (const auto& curve : curves) {
        const double tol = 1e-9;
        worst = std::max(worst, std::abs(rar_integral(curve, tol) - lar_integral(curve.mirror(), tol)));
    }
    c.require(worst < 1e-6, "max |RAR(C) - LAR(mirror C)| = " + num(worst));
    if (c.ok) c.detail = "max |RAR(C) - LAR(mirror C)| = " + num(worst) + " over " + std::to_string(curves.size());
    return c;
}

Check preference_sweep()
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    const auto rows = burgt_preference_sweep(grid, 1e-9);
    const double elapsed = seconds_since(start);
    for (const auto& r : rows) {
        c.require(r.rar > r.lar, "RAR <= LAR at AR " + num(r.ar));
        c.require(r.lar >= r.min_bound && r.lar <= r.max_bound, "LAR outside bounds at AR " + num(r.ar));
        c.require(r.rar >= r.min_bound && r.rar <= r.max_bound, "RAR outside bounds at AR " + num(r.ar));
    }
    c.require(rows.size() == 19, "expected 19 rows");
    c.require(elapsed < 10.0, "runtime " + num(elapsed) + " s");
    if (c.ok) c.detail = "19 rows, RAR > LAR everywhere, " + num(elapsed) + " s";
    return c;
}

Check cap_equivalence()
{
    Check c;
    std::mt19937_64 rng(77);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto s = testsupport::random_tied_sample(rng, 200, 80, 10);
        worst = std::max(worst, std::abs(ar_from_cap(cap_curve(s), s.default_rate()) - ar_mann_whitney(s).ar));
    }
    c.require(worst < 1e-12, "max difference " + num(worst));
    if (c.ok) c.detail = "max |AR_cap - AR_mw| = " + num(worst);
    return c;
}

Check discrete_vs_integral()
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    const auto curve = CurveModel::burgt(5.0);
    const double lar = lar_integral(curve, 1e-10);
    const double rar = rar_integral(curve, 1e-10);
    double worst_l = 0.0;
    double worst_r = 0.0;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto s = testsupport::burgt_sample_stratified(5.0, 20000, 2000, seed);
        worst_l = std::max(worst_l, std::abs(lar_discrete(s) - lar));
        worst_r = std::max(worst_r, std::abs(rar_discrete(s) - rar));
    }
    const double elapsed = seconds_since(start);
    c.require(worst_l < 0.02, "LAR gap " + num(worst_l));
    c.require(worst_r < 0.02, "RAR gap " + num(worst_r));
    c.require(elapsed < 60.0, "runtime " + num(elapsed) + " s");
    if (c.ok) {
        c.detail = "max LAR gap " + num(worst_l) + ", max RAR gap " + num(worst_r) + ", " + num(elapsed) + " s";
    }
    return c;
}

Check imputed_refinement()
{
    Check c;
    const GradeTable table(testsupport::burgt_grades(5.0, 1000, 1000, 0.05));
    const auto curve = CurveModel::burgt(5.0);
    const double dar = std::abs(ar_imputed(table) - burgt_ar(5.0));
    const double dlar = std::abs(lar_imputed(table) - lar_integral(curve, 1e-10));
    const double drar = std::abs(rar_imputed(table) - rar_integral(curve, 1e-10));
    c.require(dar < 0.005, "AR gap " + num(dar));
    c.require(dlar < 0.01, "LAR gap " + num(dlar));
    c.require(drar < 0.01, "RAR gap " + num(drar));
    if (c.ok) c.detail = "gaps AR " + num(dar) + ", LAR " + num(dlar) + ", RAR " + num(drar);
    return c;
}

Check trapezoid_area()
{
    Check c;
    auto triples = feasible_triples(10, 50);
    triples.insert(triples.begin(), {0.667, 0.53, 0.486});
    double worst_area = 0.0;
    double worst_sum = 0.0;
    for (const auto& [ar, lar, rar] : triples) {
        const auto t = trapezoid_decomposition(ar, lar, rar);
        worst_area = std::max(worst_area, std::abs(t.area() - (1.0 + ar) / 2));
        worst_sum = std::max(worst_sum, std::abs(t.cap_a + t.cap_b + t.indifference - 1.0));
    }
    c.require(worst_area < 1e-9, "area deviation " + num(worst_area));
    c.require(worst_sum < 1e-9, "a + b + I deviation " + num(worst_sum));
    if (c.ok) c.detail = "area dev " + num(worst_area) + ", a+b+I dev " + num(worst_sum);
    return c;
}

Check sigma_sanity()
{
    Check c;
    const double exact = sigma_ar(0.0, 100, 100, SigmaForm::exact);
    c.require(std::abs(exact - std::sqrt(201.0 / 30000.0)) < 1e-12, "exact form " + num(exact));
    double worst = 0.0;
    for (double ar : {0.0, 0.2, 0.5, 0.8, 0.95}) {
        for (std::size_t d : {10u, 100u, 1000u}) {
            const double e = sigma_ar(ar, 50 * d, d, SigmaForm::exact);
            const double s = sigma_ar(ar, 50 * d, d, SigmaForm::simplified);
            worst = std::max(worst, std::abs(s - e) / e);
        }
    }
    c.require(worst < 0.05, "relative gap " + num(worst));
    if (c.ok) c.detail = "sigma = " + num(exact) + ", max relative gap at N = 50 D: " + num(worst);
    return c;
}

Check multiplier_cross_check()
{
    Check c;
    auto triples = feasible_triples(12, 20);
    triples.insert(triples.begin(), {0.667, 0.53, 0.486});
    double worst = 0.0;
    for (const auto& [ar, lar, rar] : triples) {
        const auto m = multipliers(ar, lar, rar);
        worst = std::max({worst, std::abs(m.mu_l - m.mu_l_unified), std::abs(m.mu_r - m.mu_r_unified)});
    }
    c.require(worst < 1e-6, "max |mu - mu_unified| = " + num(worst));
    if (c.ok) c.detail = "max |mu - mu_unified| = " + num(worst) + " over 21 triples";
    return c;
}

Check imputed_fixture()
{
    Check c;
    const std::vector<Grade> grades{{"A", 100, 0.5}, {"B", 100, 0.1}};
    const GradeTable table(grades);
    const double ar = ar_imputed(table);
    const double dl = std::abs(lar_imputed(table) - testsupport::lar_imputed_literal(grades));
    const double dr = std::abs(rar_imputed(table) - testsupport::rar_imputed_literal(grades));
    c.require(std::abs(ar - 0.47619) <= 1e-5, "AR_imp = " + num(ar));
    c.require(dl < 1e-10, "LAR_imp oracle gap " + num(dl));
    c.require(dr < 1e-10, "RAR_imp oracle gap " + num(dr));
    if (c.ok) c.detail = "AR_imp = " + num(ar) + ", oracle gaps " + num(dl) + "/" + num(dr);
    return c;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"analyze recovers the triangle apexes 0.116 / 0.185", analyze_golden},
        {"triangle metric inversion round trip on a 20x20 grid", triangle_round_trip},
        {"extreme triangles attain the LAR bounds", bound_attainment},
        {"random model has zero AR, LAR, RAR", random_model_zero},
        {"mirror duality RAR(C) = LAR(mirror C)", mirror_duality},
        {"van der Burgt sweep is right-preferent within bounds", preference_sweep},
        {"CAP-area AR equals Mann-Whitney AR", cap_equivalence},
        {"discrete LAR/RAR match the integrals (N=20000, D=2000)", discrete_vs_integral},
        {"1000-grade imputed metrics match the curve", imputed_refinement},
        {"trapezoid area equals the AUC", trapezoid_area},
        {"sigma_AR exact value and simplified approximation", sigma_sanity},
        {"multipliers agree with the unified equation", multiplier_cross_check},
        {"two-grade imputed fixture and literal oracle", imputed_fixture},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2zu: %s -- %s\n", result.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    result.detail.c_str());
        failures += result.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
