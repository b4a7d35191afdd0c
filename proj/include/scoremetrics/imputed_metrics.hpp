#pragma once

// Metrics imputed from a calibrated master scale: each grade contributes
// count·pd expected defaults and count·(1 − pd) expected non-defaults. No
// default outcomes are needed.

#include "scoremetrics/core.hpp"

#include <span>
#include <string>
#include <vector>

namespace scoremetrics {

struct Grade {
    std::string label;
    double count = 0.0;  ///< objects in the grade (number or population share), ≥ 0
    double pd = 0.0;     ///< calibrated default probability, strictly inside (0,1)
};

/// Rating grades ordered from worst to best, i.e. by non-increasing PD.
///
/// Construction rejects (never re-sorts) out-of-order grades and names the
/// first offending row. Empty grades are allowed and produce repeated points
/// on the imputed ROC.
class GradeTable {
public:
    explicit GradeTable(std::vector<Grade> grades);

    std::span<const Grade> grades() const noexcept { return grades_; }
    std::size_t size() const noexcept { return grades_.size(); }

    double expected_defaults() const noexcept { return defaults_; }
    double expected_nondefaults() const noexcept { return nondefaults_; }

private:
    std::vector<Grade> grades_;
    double defaults_ = 0.0;
    double nondefaults_ = 0.0;
};

/// Imputed ROC with one vertex per grade:
///   g_k = Σ_{i≤k} n_i(1 − d_i) / Σ_i n_i(1 − d_i),   R_k = Σ_{i≤k} n_i·d_i / Σ_i n_i·d_i.
RocPolyline imputed_roc(const GradeTable& table);

/// AR_imp = 2·AUC_imp − 1 with AUC_imp the trapezoid area under the imputed ROC.
double ar_imputed(const GradeTable& table);

/// LAR_imp = 2·LAUC_imp − 1,
/// LAUC_imp = Σ_k (g_k − g_{k−1}) / (g_k·R_k) · Σ_{s≤k} ½(R_s + R_{s−1})(g_s − g_{s−1}),
/// where terms with g_k·R_k = 0 contribute nothing.
double lar_imputed(const GradeTable& table);

/// RAR_imp = 2·RAUC_imp − 1,
/// RAUC_imp = Σ_k (R_k − R_{k−1}) / ((1 − g_{k−1})(1 − R_{k−1})) · Σ_{s≥k} (1 − ½(g_s + g_{s−1}))(R_s − R_{s−1}),
/// where terms with a vanishing denominator contribute nothing.
double rar_imputed(const GradeTable& table);

/// Imputed AR/LAR/RAR with expected counts; σ_AR is left empty.
MetricReport imputed_report(const GradeTable& table);

} // namespace scoremetrics
