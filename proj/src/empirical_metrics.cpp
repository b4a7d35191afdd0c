#include "scoremetrics/empirical_metrics.hpp"

#include "scoremetrics/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace scoremetrics {
namespace {

void require_scores(const std::vector<double>& scores, const char* what)
{
    if (scores.empty()) {
        throw InputError(std::string("degenerate sample: no ") + what);
    }
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw InputError(std::string("non-finite score among ") + what);
        }
    }
}

// Twice the half-credit win count of every non-default against all defaults:
// 2·#(Ŝ_d < S_n) + #(Ŝ_d == S_n). Integers keep AR sums exact.
std::vector<std::int64_t> nondefault_credit2(const ScoreSample& sample)
{
    const auto defaults = sample.default_scores();
    std::vector<std::int64_t> credit;
    credit.reserve(sample.n_nondefault());
    for (double s : sample.nondefault_scores()) {
        const auto lower = std::lower_bound(defaults.begin(), defaults.end(), s);
        const auto upper = std::upper_bound(lower, defaults.end(), s);
        credit.push_back(2 * (lower - defaults.begin()) + (upper - lower));
    }
    return credit;
}

// Twice the half-credit count of non-defaults ranked above every default:
// T2_d = 2·#(S_k > Ŝ_d) + #(S_k == Ŝ_d).
std::vector<std::int64_t> default_credit2(const ScoreSample& sample)
{
    const auto goods = sample.nondefault_scores();
    const auto n = static_cast<std::int64_t>(goods.size());
    std::vector<std::int64_t> credit;
    credit.reserve(sample.n_default());
    for (double s : sample.default_scores()) {
        const auto lower = std::lower_bound(goods.begin(), goods.end(), s);
        const auto upper = std::upper_bound(lower, goods.end(), s);
        credit.push_back(2 * (n - (upper - goods.begin())) + (upper - lower));
    }
    return credit;
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

std::vector<double> draw_without_replacement(std::span<const double> values, std::size_t count,
                                             std::mt19937_64& engine)
{
    std::vector<double> pool(values.begin(), values.end());
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + uniform_below(engine, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace

ScoreSample::ScoreSample(std::vector<double> nondefault_scores, std::vector<double> default_scores)
    : nondefault_(std::move(nondefault_scores)), default_(std::move(default_scores))
{
    require_scores(nondefault_, "non-defaults");
    require_scores(default_, "defaults");
    std::sort(nondefault_.begin(), nondefault_.end());
    std::sort(default_.begin(), default_.end());
}

double ScoreSample::default_rate() const noexcept
{
    return static_cast<double>(default_.size()) / static_cast<double>(default_.size() + nondefault_.size());
}

ScoreSample ScoreSample::negated() const
{
    auto flip = [](std::span<const double> in) {
        std::vector<double> out(in.begin(), in.end());
        for (double& s : out) {
            s = -s;
        }
        return out;
    };
    return ScoreSample(flip(nondefault_), flip(default_));
}

RocPolyline empirical_roc(const ScoreSample& sample)
{
    const auto credit = nondefault_credit2(sample);
    const double n = static_cast<double>(sample.n_nondefault());
    const double twice_d = 2.0 * static_cast<double>(sample.n_default());

    std::vector<Point> points;
    points.reserve(credit.size() + 2);
    points.push_back({0.0, 0.0});
    for (std::size_t i = 0; i < credit.size(); ++i) {
        points.push_back({static_cast<double>(i + 1) / n, static_cast<double>(credit[i]) / twice_d});
    }
    if (points.back().y < 1.0) {
        points.push_back({1.0, 1.0});
    }
    return RocPolyline(std::move(points), CurveKind::roc);
}

MannWhitney ar_mann_whitney(const ScoreSample& sample)
{
    std::int64_t total = 0;
    for (auto c : nondefault_credit2(sample)) {
        total += c;
    }
    const auto pairs = static_cast<std::int64_t>(sample.n_nondefault()) * static_cast<std::int64_t>(sample.n_default());
    // AR = (Σδ − N·D/2) / (N·D/2) = (2Σδ − N·D) / (N·D); `total` already holds 2Σδ.
    const double ar = static_cast<double>(total - pairs) / static_cast<double>(pairs);
    const double auc = static_cast<double>(total) / (2.0 * static_cast<double>(pairs));
    return {auc, ar};
}

double lar_discrete(const ScoreSample& sample)
{
    const auto credit = nondefault_credit2(sample);
    std::int64_t running = 0;
    double sum = 0.0;
    for (std::size_t k = 0; k < credit.size(); ++k) {
        running += credit[k];
        if (credit[k] != 0) {
            sum += static_cast<double>(running) / (static_cast<double>(k + 1) * static_cast<double>(credit[k]));
        }
    }
    const double lauc = sum / static_cast<double>(credit.size());
    return 2.0 * lauc - 1.0;
}

double rar_discrete(const ScoreSample& sample)
{
    const auto credit = default_credit2(sample);
    const std::size_t d_count = credit.size();
    std::vector<std::int64_t> suffix(d_count + 1, 0);
    for (std::size_t d = d_count; d-- > 0;) {
        suffix[d] = suffix[d + 1] + credit[d];
    }
    double sum = 0.0;
    for (std::size_t d = 0; d < d_count; ++d) {
        if (credit[d] != 0) {
            sum += static_cast<double>(suffix[d]) / (static_cast<double>(d_count - d) * static_cast<double>(credit[d]));
        }
    }
    const double rauc = sum / static_cast<double>(d_count);
    return 2.0 * rauc - 1.0;
}

RocPolyline cap_curve(const ScoreSample& sample)
{
    const auto goods = sample.nondefault_scores();
    const auto bads = sample.default_scores();
    const std::size_t total = goods.size() + bads.size();
    const auto d_count = static_cast<std::int64_t>(bads.size());

    std::vector<Point> points;
    points.reserve(total + 1);
    points.push_back({0.0, 0.0});

    std::size_t gi = 0;
    std::size_t bi = 0;
    std::int64_t defaults_before = 0;
    while (gi < goods.size() || bi < bads.size()) {
        double score = 0.0;
        if (gi == goods.size()) {
            score = bads[bi];
        } else if (bi == bads.size()) {
            score = goods[gi];
        } else {
            score = std::min(goods[gi], bads[bi]);
        }
        std::int64_t group_goods = 0;
        std::int64_t group_bads = 0;
        while (gi < goods.size() && goods[gi] == score) {
            ++gi;
            ++group_goods;
        }
        while (bi < bads.size() && bads[bi] == score) {
            ++bi;
            ++group_bads;
        }
        const std::int64_t group = group_goods + group_bads;
        const std::size_t start = points.size() - 1;
        for (std::int64_t j = 1; j <= group; ++j) {
            const double x = static_cast<double>(start + static_cast<std::size_t>(j)) / static_cast<double>(total);
            const double y = static_cast<double>(defaults_before * group + group_bads * j) /
                             static_cast<double>(group * d_count);
            points.push_back({x, y});
        }
        defaults_before += group_bads;
    }
    return RocPolyline(std::move(points), CurveKind::cap);
}

double ar_from_cap(const RocPolyline& cap, double d_share)
{
    if (cap.kind() != CurveKind::cap) {
        throw InputError("ar_from_cap expects a CAP curve");
    }
    if (!(d_share > 0.0 && d_share < 1.0)) {
        throw InputError("default share must lie in (0,1), got " + std::to_string(d_share));
    }
    return (2.0 * cap.area() - 1.0) / (1.0 - d_share);
}

std::vector<PdBucket> pd_profile(const ScoreSample& sample, std::size_t n_buckets)
{
    const std::size_t total = sample.n_nondefault() + sample.n_default();
    if (n_buckets == 0 || n_buckets > total) {
        throw InputError("bucket count must lie in [1, " + std::to_string(total) + "], got " +
                         std::to_string(n_buckets));
    }
    const auto curve = cap_curve(sample);
    const auto cap = curve.points();
    const double d_count = static_cast<double>(sample.n_default());

    std::vector<PdBucket> buckets;
    buckets.reserve(n_buckets);
    for (std::size_t b = 0; b < n_buckets; ++b) {
        const std::size_t begin = b * total / n_buckets;
        const std::size_t end = (b + 1) * total / n_buckets;
        const double size = static_cast<double>(end - begin);
        buckets.push_back({
            0.5 * static_cast<double>(begin + end) / static_cast<double>(total),
            d_count * (cap[end].y - cap[begin].y) / size,
            size / static_cast<double>(total),
        });
    }
    return buckets;
}

double sigma_ar(double ar, std::size_t n_nondefault, std::size_t n_default, SigmaForm form)
{
    if (!(ar >= -1.0 && ar <= 1.0)) {
        throw InputError("AR must lie in [-1,1], got " + std::to_string(ar));
    }
    if (n_nondefault == 0 || n_default == 0) {
        throw InputError("sigma_AR needs at least one default and one non-default");
    }
    const double n = static_cast<double>(n_nondefault);
    const double d = static_cast<double>(n_default);
    double radicand = 0.0;
    if (form == SigmaForm::exact) {
        radicand = ((2.0 * n + 1.0) * (1.0 - ar * ar) - (n - d) * (1.0 - ar) * (1.0 - ar)) / (3.0 * n * d);
    } else {
        radicand = (1.0 + 2.0 * ar - 3.0 * ar * ar) / (3.0 * d);
    }
    if (radicand < 0.0) {
        // Cancellation at |AR| = 1 can leave a residue of a few ulps.
        if (radicand > -1e-15) {
            return 0.0;
        }
        throw InputError("sigma_AR radicand is negative (" + std::to_string(radicand) + ") for AR = " +
                         std::to_string(ar) + "; inputs are inconsistent with a convex ROC");
    }
    return std::sqrt(radicand);
}

ScoreSample thin(const ScoreSample& sample, std::size_t max_nondefault, std::size_t max_default, std::uint64_t seed)
{
    if (max_nondefault < 2 || max_default < 2) {
        throw InputError("thinning limits must be at least 2");
    }
    std::mt19937_64 engine(seed);
    auto pick = [&](std::span<const double> scores, std::size_t limit) {
        if (scores.size() <= limit) {
            return std::vector<double>(scores.begin(), scores.end());
        }
        return draw_without_replacement(scores, limit, engine);
    };
    auto goods = pick(sample.nondefault_scores(), max_nondefault);
    auto bads = pick(sample.default_scores(), max_default);
    return ScoreSample(std::move(goods), std::move(bads));
}

MetricReport binary_report(const ScoreSample& sample)
{
    MetricReport report;
    report.source = MetricSource::binary;
    report.ar = ar_mann_whitney(sample).ar;
    report.lar = lar_discrete(sample);
    report.rar = rar_discrete(sample);
    report.n_nondefault = static_cast<double>(sample.n_nondefault());
    report.n_default = static_cast<double>(sample.n_default());
    auto bound = [&](SigmaForm form) -> std::optional<double> {
        try {
            return sigma_ar(report.ar, sample.n_nondefault(), sample.n_default(), form);
        } catch (const InputError&) {
            return std::nullopt;
        }
    };
    report.sigma_ar = bound(SigmaForm::exact);
    report.sigma_ar_simplified = bound(SigmaForm::simplified);
    return report;
}

} // namespace scoremetrics
