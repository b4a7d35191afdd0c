#pragma once

// Metrics computed directly from binary default / non-default outcomes.
//
// Scores follow the "higher is better" convention: defaults are expected to
// sit at the low end. Every pairwise comparison uses the half-credit rule
// delta(u, w) = 1, 1/2, 0 for u > w, u == w, u < w.

#include "scoremetrics/core.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scoremetrics {

/// Scores of non-defaulted and defaulted objects, each sorted ascending.
class ScoreSample {
public:
    /// Sorts both lists. Throws InputError if either is empty or holds a
    /// non-finite score.
    ScoreSample(std::vector<double> nondefault_scores, std::vector<double> default_scores);

    std::span<const double> nondefault_scores() const noexcept { return nondefault_; }
    std::span<const double> default_scores() const noexcept { return default_; }
    std::size_t n_nondefault() const noexcept { return nondefault_.size(); }
    std::size_t n_default() const noexcept { return default_.size(); }

    /// Observed default rate D / (D + N).
    double default_rate() const noexcept;

    /// Same objects with every score negated (reverses the ranking).
    ScoreSample negated() const;

private:
    std::vector<double> nondefault_;
    std::vector<double> default_;
};

/// Half-credit comparison: 1 if u > w, 1/2 if u == w, 0 otherwise.
constexpr double delta(double u, double w) noexcept
{
    return u > w ? 1.0 : (u == w ? 0.5 : 0.0);
}

/// ROC sampled at every non-default: (n/N, R_n) with
/// R_n = (1/D)·Σ_d delta(S_n, Ŝ_d). When the best non-default ties with or
/// ranks below some default (R_N < 1) a closing (1,1) point is appended.
RocPolyline empirical_roc(const ScoreSample& sample);

struct MannWhitney {
    double auc = 0.0;
    double ar = 0.0;
};

/// Mann-Whitney AUC over all (non-default, default) pairs; AR = 2·AUC − 1.
MannWhitney ar_mann_whitney(const ScoreSample& sample);

/// Left-hand accuracy ratio, LAR = 2·LAUC − 1, with
/// LAUC = (1/N)·Σ_k [Σ_{n≤k} Σ_d δ(S_n,Ŝ_d)] / [k·Σ_d δ(S_k,Ŝ_d)]
/// and a zero term whenever the denominator vanishes. O(N log D).
double lar_discrete(const ScoreSample& sample);

/// Right-hand accuracy ratio, RAR = 2·RAUC − 1, with
/// RAUC = (1/D)·Σ_d [Σ_{m≥d} T_m] / [(D−d+1)·T_d],  T_d = Σ_k δ(S_k,Ŝ_d),
/// and a zero term whenever T_d vanishes. O(D log N).
double rar_discrete(const ScoreSample& sample);

/// Cumulative accuracy profile over the whole population sorted by score:
/// x = i/(N+D), y = share of defaults among the first i objects. Objects with
/// equal scores form one linear piece (defaults spread evenly across the tie
/// group), which keeps the CAP area consistent with the half-credit AUC.
RocPolyline cap_curve(const ScoreSample& sample);

/// AR = (2·∫C dx − 1) / (1 − d_share) by the trapezoid rule.
/// Throws InputError unless 0 < d_share < 1 and `cap` is a CAP curve.
double ar_from_cap(const RocPolyline& cap, double d_share);

struct PdBucket {
    double x_mid = 0.0;
    double pd = 0.0;
    double share = 0.0;  ///< fraction of the population in the bucket
};

/// Observed default rate in `n_buckets` contiguous, near-equal slices of the
/// score-sorted population (sizes differ by at most one object). Rates are
/// read off the CAP curve, PD = D·ΔC/size, so tied scores straddling a bucket
/// edge are shared proportionally.
std::vector<PdBucket> pd_profile(const ScoreSample& sample, std::size_t n_buckets);

enum class SigmaForm { exact, simplified };

/// Upper bound on the standard deviation of the sample AR:
///   exact:      sqrt(((2N+1)(1−AR²) − (N−D)(1−AR)²) / (3·N·D))
///   simplified: sqrt((1 + 2·AR − 3·AR²) / (3·D))       (N ≫ D ≫ 1)
/// N counts non-defaults and D defaults. Throws InputError on a negative radicand.
double sigma_ar(double ar, std::size_t n_nondefault, std::size_t n_default, SigmaForm form);

/// Uniform subsample without replacement of at most `max_nondefault` /
/// `max_default` scores, re-sorted.
///
/// Generator: std::mt19937_64 seeded with `seed`. Bounded integers use
/// rejection sampling (draw x until x ≥ 2^64 mod n, return x mod n), and
/// selection is a partial Fisher-Yates shuffle, non-defaults first, then
/// defaults from the same stream. Both pieces are fully specified, so the
/// output is reproducible across platforms and languages.
ScoreSample thin(const ScoreSample& sample, std::size_t max_nondefault, std::size_t max_default, std::uint64_t seed);

/// AR, LAR, RAR and both σ_AR forms for a binary sample.
MetricReport binary_report(const ScoreSample& sample);

} // namespace scoremetrics
