#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwg/score_tensor.hpp"

namespace rwg {

/// Per-sample mean over episodes.
std::vector<double> mean_scores(ScoreMatrixView scores);

/// Per-sample spread over episodes: sum of squared deviations from the
/// sample's mean, divided by (n_episodes + 1). The enlarged denominator
/// shrinks the estimate, penalizing small episode counts.
std::vector<double> variance_scores(ScoreMatrixView scores);

/// Rank of each sample when sorted ascending by mean (0 = worst). Ties keep
/// their original sample order.
std::vector<std::size_t> rank_by_mean(std::span<const double> means);

struct SampleStats {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t rank = 0;
};

/// mean/variance/rank per sample, indexed by sample.
std::vector<SampleStats> sample_stats(ScoreMatrixView scores);

struct Histogram {
    /// bins() + 1 monotonically increasing edges.
    std::vector<double> bin_edges;
    std::vector<std::size_t> counts;

    std::size_t bins() const { return counts.size(); }
};

/// Equal-width histogram over [min, max] of the values. Bins are half-open
/// [lo, hi) except the last, which is closed. A degenerate span (all values
/// equal) widens to value +/- 0.5.
Histogram histogram(std::span<const double> values, std::size_t n_bins);

/// Nearest-rank percentile: the ceil(q/100 * n)-th smallest value.
double percentile(std::span<const double> values, double q);

struct EpisodeRef {
    std::size_t sample = 0;
    std::size_t episode = 0;

    friend bool operator==(const EpisodeRef&, const EpisodeRef&) = default;
};

/// The k = max(1, floor(fraction * n_samples * n_episodes)) best-scoring
/// episodes, sorted by score descending; ties break by ascending (sample,
/// episode) so the result is unique.
std::vector<EpisodeRef> top_fraction_episodes(ScoreMatrixView scores,
                                              double fraction);

/// Fraction of samples whose mean reaches the threshold.
double solve_probability(std::span<const double> means, double threshold);

/// Probability that at least one of n independent samples solves, given the
/// per-sample solve probability p.
double success_probability(double p, std::uint64_t n);

/// Expected number of samples until the first solver, 1/p. Throws
/// NoFiniteWaitingTimeError at p = 0 instead of returning a sentinel.
double expected_waiting_time(double p);

struct AnalysisOptions {
    std::size_t n_bins = 40;
    double top_fraction = 0.001;
    double percentile_q = 99.9;
};

struct ArchitectureReport {
    std::string architecture;
    std::vector<SampleStats> samples;
    Histogram mean_histogram;
    std::vector<EpisodeRef> top_episodes;
    double best_mean = 0.0;
    double percentile_999 = 0.0;
    double solve_fraction = 0.0;
    double runtime_seconds = 0.0;
};

struct AnalysisReport {
    std::string env_name;
    double solve_threshold = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_episodes = 0;
    AnalysisOptions options;
    std::vector<ArchitectureReport> architectures;
};

/// Runs the full per-architecture analysis of a score tensor against the
/// given solve threshold.
AnalysisReport analyze(const ScoreTensor& tensor, double solve_threshold,
                       const AnalysisOptions& options = {});

}  // namespace rwg
