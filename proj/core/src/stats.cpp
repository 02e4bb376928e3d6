#include "rwg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rwg {

std::vector<double> mean_scores(ScoreMatrixView scores) {
    if (scores.n_samples() == 0 || scores.n_episodes() == 0)
        throw EmptyInputError("score matrix is empty");
    std::vector<double> means(scores.n_samples());
    for (std::size_t n = 0; n < scores.n_samples(); ++n) {
        const auto row = scores.sample(n);
        means[n] = std::accumulate(row.begin(), row.end(), 0.0) /
                   static_cast<double>(scores.n_episodes());
    }
    return means;
}

std::vector<double> variance_scores(ScoreMatrixView scores) {
    const std::vector<double> means = mean_scores(scores);
    std::vector<double> variances(scores.n_samples());
    for (std::size_t n = 0; n < scores.n_samples(); ++n) {
        const auto row = scores.sample(n);
        double sum_sq = 0.0;
        for (const double s : row) sum_sq += (s - means[n]) * (s - means[n]);
        variances[n] = sum_sq / static_cast<double>(scores.n_episodes() + 1);
    }
    return variances;
}

std::vector<std::size_t> rank_by_mean(std::span<const double> means) {
    std::vector<std::size_t> order(means.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return means[a] < means[b];
                     });
    std::vector<std::size_t> ranks(means.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
    return ranks;
}

std::vector<SampleStats> sample_stats(ScoreMatrixView scores) {
    const std::vector<double> means = mean_scores(scores);
    const std::vector<double> variances = variance_scores(scores);
    const std::vector<std::size_t> ranks = rank_by_mean(means);
    std::vector<SampleStats> stats(scores.n_samples());
    for (std::size_t n = 0; n < stats.size(); ++n)
        stats[n] = SampleStats{means[n], variances[n], ranks[n]};
    return stats;
}

Histogram histogram(std::span<const double> values, std::size_t n_bins) {
    if (values.empty()) throw EmptyInputError("histogram of no values");
    if (n_bins == 0) throw InvalidArgumentError("histogram needs n_bins >= 1");
    for (const double v : values)
        if (!std::isfinite(v)) throw NumericalError("non-finite histogram value");

    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    double lo = *min_it;
    double hi = *max_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }

    Histogram h;
    h.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i)
        h.bin_edges[i] = lo + (hi - lo) * (static_cast<double>(i) /
                                           static_cast<double>(n_bins));
    h.bin_edges.front() = lo;
    h.bin_edges.back() = hi;
    h.counts.assign(n_bins, 0);

    const auto first_inner = h.bin_edges.begin() + 1;
    const auto last_inner = h.bin_edges.end() - 1;
    for (const double v : values) {
        const auto it = std::upper_bound(first_inner, last_inner, v);
        ++h.counts[static_cast<std::size_t>(it - first_inner)];
    }
    return h;
}

double percentile(std::span<const double> values, double q) {
    if (values.empty()) throw EmptyInputError("percentile of no values");
    if (!(q > 0.0 && q <= 100.0))
        throw InvalidArgumentError("percentile q must be in (0, 100]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    const auto rank = static_cast<std::size_t>(std::ceil(q / 100.0 * n));
    return sorted[std::max<std::size_t>(rank, 1) - 1];
}

std::vector<EpisodeRef> top_fraction_episodes(ScoreMatrixView scores,
                                              double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw InvalidArgumentError("top fraction must be in (0, 1]");
    const std::size_t total = scores.n_samples() * scores.n_episodes();
    if (total == 0) throw EmptyInputError("score matrix is empty");
    const auto k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(fraction *
                                               static_cast<double>(total))));

    std::vector<EpisodeRef> refs(total);
    for (std::size_t n = 0; n < scores.n_samples(); ++n)
        for (std::size_t e = 0; e < scores.n_episodes(); ++e)
            refs[n * scores.n_episodes() + e] = EpisodeRef{n, e};

    const auto better = [&](const EpisodeRef& a, const EpisodeRef& b) {
        const double sa = scores(a.sample, a.episode);
        const double sb = scores(b.sample, b.episode);
        if (sa != sb) return sa > sb;
        if (a.sample != b.sample) return a.sample < b.sample;
        return a.episode < b.episode;
    };
    std::partial_sort(refs.begin(),
                      refs.begin() + static_cast<std::ptrdiff_t>(k), refs.end(),
                      better);
    refs.resize(k);
    return refs;
}

double solve_probability(std::span<const double> means, double threshold) {
    if (means.empty()) throw EmptyInputError("solve probability of no samples");
    const auto solved = std::count_if(means.begin(), means.end(),
                                      [&](double m) { return m >= threshold; });
    return static_cast<double>(solved) / static_cast<double>(means.size());
}

double success_probability(double p, std::uint64_t n) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgumentError("probability must be in [0, 1]");
    return 1.0 - std::pow(1.0 - p, static_cast<double>(n));
}

double expected_waiting_time(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgumentError("probability must be in [0, 1]");
    if (p == 0.0) throw NoFiniteWaitingTimeError();
    return 1.0 / p;
}

AnalysisReport analyze(const ScoreTensor& tensor, double solve_threshold,
                       const AnalysisOptions& options) {
    tensor.validate();
    AnalysisReport report;
    report.env_name = tensor.env_name;
    report.solve_threshold = solve_threshold;
    report.n_samples = tensor.n_samples;
    report.n_episodes = tensor.n_episodes;
    report.options = options;
    report.architectures.reserve(tensor.n_architectures());

    for (std::size_t a = 0; a < tensor.n_architectures(); ++a) {
        const ScoreMatrixView scores = tensor.architecture_scores(a);
        ArchitectureReport arch;
        arch.architecture = tensor.architectures[a];
        arch.samples = sample_stats(scores);
        arch.runtime_seconds = tensor.runtime_seconds[a];

        std::vector<double> means(arch.samples.size());
        for (std::size_t n = 0; n < means.size(); ++n)
            means[n] = arch.samples[n].mean;
        arch.mean_histogram = histogram(means, options.n_bins);
        arch.top_episodes = top_fraction_episodes(scores, options.top_fraction);
        arch.best_mean = *std::max_element(means.begin(), means.end());
        arch.percentile_999 = percentile(means, options.percentile_q);
        arch.solve_fraction = solve_probability(means, solve_threshold);
        report.architectures.push_back(std::move(arch));
    }
    return report;
}

}  // namespace rwg
