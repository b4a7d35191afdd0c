#pragma once

// Comparison of binary-data metrics against metrics imputed from the
// calibrated master scale. First-order agreement is judged against the σ_AR
// bound; second-order metrics then tell whether the target preference of the
// model survived calibration.

#include "scoremetrics/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scoremetrics {

enum class Preference { left, right, neutral };

std::string_view to_string(Preference preference) noexcept;

/// left if lar − rar > band, right if rar − lar > band, neutral otherwise.
Preference classify_preference(double lar, double rar, double band);

struct ValidationVerdict {
    MetricReport binary;
    MetricReport imputed;
    double z = 2.0;
    double band = 0.0;
    bool gini_consistent = false;     ///< |AR − AR_imp| ≤ z·σ_AR
    double ar_gap = 0.0;              ///< AR − AR_imp
    Preference preference_binary = Preference::neutral;
    Preference preference_imputed = Preference::neutral;
    bool preference_consistent = false;
    double dominant_metric_gap = 0.0; ///< dominant binary metric minus the same-side imputed metric
    std::vector<std::string> notes;
};

inline constexpr double kDefaultZ = 2.0;

/// Builds the verdict. `band` defaults to the binary σ_AR. Throws InputError
/// when the sources are not binary/imputed, σ_AR is missing or not positive,
/// z ≤ 0 or band < 0.
ValidationVerdict validate(const MetricReport& binary, const MetricReport& imputed, double z = kDefaultZ,
                           std::optional<double> band = std::nullopt);

} // namespace scoremetrics
