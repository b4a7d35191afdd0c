#include "scoremetrics/calibration_validation.hpp"

#include "scoremetrics/errors.hpp"

#include <cmath>
#include <sstream>

namespace scoremetrics {

std::string_view to_string(Preference preference) noexcept
{
    switch (preference) {
    case Preference::left:
        return "left";
    case Preference::right:
        return "right";
    case Preference::neutral:
        break;
    }
    return "neutral";
}

Preference classify_preference(double lar, double rar, double band)
{
    if (lar - rar > band) return Preference::left;
    if (rar - lar > band) return Preference::right;
    return Preference::neutral;
}

ValidationVerdict validate(const MetricReport& binary, const MetricReport& imputed, double z,
                           std::optional<double> band)
{
    if (binary.source != MetricSource::binary) {
        throw InputError("first report must come from binary data, got source '" +
                         std::string(to_string(binary.source)) + "'");
    }
    if (imputed.source != MetricSource::imputed) {
        throw InputError("second report must be imputed from a grade table, got source '" +
                         std::string(to_string(imputed.source)) + "'");
    }
    if (!binary.sigma_ar || !(*binary.sigma_ar > 0.0)) {
        throw InputError("binary report needs a positive sigma_ar");
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw InputError("z must be positive");
    }
    const double sigma = *binary.sigma_ar;
    const double width = band.value_or(sigma);
    if (!(width >= 0.0) || !std::isfinite(width)) {
        throw InputError("preference band must be non-negative");
    }

    ValidationVerdict v;
    v.binary = binary;
    v.imputed = imputed;
    v.z = z;
    v.band = width;
    v.ar_gap = binary.ar - imputed.ar;
    v.gini_consistent = std::abs(v.ar_gap) <= z * sigma;
    v.preference_binary = classify_preference(binary.lar, binary.rar, width);
    v.preference_imputed = classify_preference(imputed.lar, imputed.rar, width);
    v.preference_consistent = v.preference_binary == v.preference_imputed;

    bool left_dominant = v.preference_binary == Preference::left;
    if (v.preference_binary == Preference::neutral) {
        left_dominant = binary.lar >= binary.rar;
    }
    v.dominant_metric_gap = left_dominant ? binary.lar - imputed.lar : binary.rar - imputed.rar;

    std::ostringstream msg;
    msg.precision(6);
    if (!v.gini_consistent) {
        msg << "|AR - AR_imp| = " << std::abs(v.ar_gap) << " exceeds z*sigma = " << z * sigma
            << "; second-order comparison is secondary until the first-order gap is resolved";
        v.notes.push_back(msg.str());
        msg.str("");
    }
    if (!v.preference_consistent) {
        msg << "target preference differs: binary " << to_string(v.preference_binary) << ", imputed "
            << to_string(v.preference_imputed);
        v.notes.push_back(msg.str());
        msg.str("");
    }
    if (v.preference_binary == Preference::neutral) {
        v.notes.push_back("binary LAR and RAR are within the band; dominant metric taken as the larger one");
    }
    return v;
}

} // namespace scoremetrics
