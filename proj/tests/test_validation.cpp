#include "doctest.h"

#include "scoremetrics/analytic_curves.hpp"
#include "scoremetrics/calibration_validation.hpp"
#include "scoremetrics/empirical_metrics.hpp"
#include "scoremetrics/errors.hpp"
#include "scoremetrics/imputed_metrics.hpp"
#include "support/test_support.hpp"

#include <random>

using namespace scoremetrics;
using doctest::Approx;

namespace {

MetricReport binary(double ar, double lar, double rar, double sigma)
{
    MetricReport r;
    r.source = MetricSource::binary;
    r.ar = ar;
    r.lar = lar;
    r.rar = rar;
    r.sigma_ar = sigma;
    r.sigma_ar_simplified = sigma;
    r.n_nondefault = 1000;
    r.n_default = 100;
    return r;
}

MetricReport imputed(double ar, double lar, double rar)
{
    MetricReport r;
    r.source = MetricSource::imputed;
    r.ar = ar;
    r.lar = lar;
    r.rar = rar;
    r.n_nondefault = 950;
    r.n_default = 50;
    return r;
}

MetricReport swapped(MetricReport r)
{
    std::swap(r.lar, r.rar);
    return r;
}

Preference opposite(Preference p)
{
    if (p == Preference::left) return Preference::right;
    if (p == Preference::right) return Preference::left;
    return p;
}

} // namespace

TEST_CASE("classify_preference")
{
    CHECK(classify_preference(0.53, 0.486, 0.02) == Preference::left);
    CHECK(classify_preference(0.4, 0.4, 0.0) == Preference::neutral);
    CHECK(classify_preference(0.4, 0.4, 0.3) == Preference::neutral);
    CHECK(classify_preference(0.40, 0.45, 0.02) == Preference::right);
    CHECK(classify_preference(0.40, 0.41, 0.02) == Preference::neutral);

    const auto curve = CurveModel::burgt(5.0);
    CHECK(classify_preference(lar_integral(curve, 1e-9), rar_integral(curve, 1e-9), 0.01) == Preference::right);
    CHECK(to_string(Preference::neutral) == "neutral");
}

TEST_CASE("gini consistency examples")
{
    CHECK(validate(binary(0.60, 0.4, 0.5, 0.03), imputed(0.61, 0.4, 0.5), 2.0).gini_consistent);
    const auto far = validate(binary(0.60, 0.4, 0.5, 0.03), imputed(0.75, 0.4, 0.5), 2.0);
    CHECK_FALSE(far.gini_consistent);
    CHECK(far.ar_gap == Approx(-0.15));
    CHECK_FALSE(far.notes.empty());
}

TEST_CASE("verdict fields")
{
    const auto v = validate(binary(0.6, 0.40, 0.52, 0.03), imputed(0.61, 0.42, 0.55));
    CHECK(v.z == 2.0);
    CHECK(v.band == 0.03);
    CHECK(v.preference_binary == Preference::right);
    CHECK(v.preference_imputed == Preference::right);
    CHECK(v.preference_consistent);
    CHECK(v.dominant_metric_gap == Approx(0.52 - 0.55));

    const auto left = validate(binary(0.6, 0.55, 0.45, 0.03), imputed(0.6, 0.50, 0.49), 2.0, 0.02);
    CHECK(left.preference_binary == Preference::left);
    CHECK(left.preference_imputed == Preference::neutral);
    CHECK_FALSE(left.preference_consistent);
    CHECK(left.dominant_metric_gap == Approx(0.05));
}

TEST_CASE("validate rejects bad inputs")
{
    const auto b = binary(0.6, 0.4, 0.5, 0.03);
    const auto i = imputed(0.6, 0.4, 0.5);
    CHECK_THROWS_AS(validate(i, b), InputError);
    CHECK_THROWS_AS(validate(b, b), InputError);
    CHECK_THROWS_AS(validate(i, i), InputError);
    CHECK_THROWS_AS(validate(b, i, 0.0), InputError);
    CHECK_THROWS_AS(validate(b, i, 2.0, -0.1), InputError);
    auto no_sigma = b;
    no_sigma.sigma_ar.reset();
    CHECK_THROWS_AS(validate(no_sigma, i), InputError);
    no_sigma.sigma_ar = 0.0;
    CHECK_THROWS_AS(validate(no_sigma, i), InputError);
}

TEST_CASE("property: swapping LAR and RAR mirrors the preferences")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto b = binary(u(rng), u(rng), u(rng), 0.001 + 0.05 * u(rng));
        const auto i = imputed(u(rng), u(rng), u(rng));
        const auto v = validate(b, i);
        const auto w = validate(swapped(b), swapped(i));
        CHECK(w.gini_consistent == v.gini_consistent);
        CHECK(w.preference_binary == opposite(v.preference_binary));
        CHECK(w.preference_imputed == opposite(v.preference_imputed));
        CHECK(w.preference_consistent == v.preference_consistent);
    }
}

TEST_CASE("property: zero band is neutral only at exact equality")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double lar = u(rng);
        const double rar = trial % 5 == 0 ? lar : u(rng);
        CHECK((classify_preference(lar, rar, 0.0) == Preference::neutral) == (lar == rar));
    }
}

TEST_CASE("property: consistency is monotone in z")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = binary(u(rng), 0.3, 0.4, 0.01 + 0.05 * u(rng));
        const auto i = imputed(u(rng), 0.3, 0.4);
        const double z = 0.1 + 4.0 * u(rng);
        if (validate(b, i, z).gini_consistent) {
            CHECK(validate(b, i, z * (1.0 + u(rng))).gini_consistent);
        }
    }
}

TEST_CASE("end-to-end: binary sample and master scale from the same curve agree")
{
    const auto sample = testsupport::burgt_sample_stratified(5.0, 20000, 1000, 9);
    const auto table = GradeTable(testsupport::burgt_grades(5.0, 200, 105, 0.05));
    const auto v = validate(binary_report(sample), imputed_report(table));
    CHECK(v.gini_consistent);
    CHECK(v.preference_binary == Preference::right);
    CHECK(v.preference_imputed == Preference::right);
    CHECK(v.preference_consistent);
    CHECK(std::abs(v.dominant_metric_gap) < 0.02);
}
