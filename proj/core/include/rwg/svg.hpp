#pragma once

#include <filesystem>
#include <string>

#include "rwg/score_tensor.hpp"
#include "rwg/stats.hpp"

namespace rwg {

enum class PlotKind {
    kMeanHistogram,
    kRankScatter,
    kVarianceVsMean,
};

/// File-name fragment for a plot kind: "mean-histogram", "rank-scatter",
/// "variance-vs-mean".
std::string to_string(PlotKind kind);

struct PlotSpec {
    PlotKind kind = PlotKind::kMeanHistogram;
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    /// Rank scatter only: fraction of episodes drawn highlighted.
    double highlight_fraction = 0.001;

    /// Throws InvalidPlotSpecError unless the ranges are finite with
    /// min < max and the highlight fraction is in (0, 1].
    void validate() const;
};

/// Axis ranges fitted to the data, everything else defaulted.
PlotSpec default_plot_spec(PlotKind kind, ScoreMatrixView scores,
                           const ArchitectureReport& stats);

/// Renders one plot of an architecture's scores as a standalone SVG string.
/// Identical inputs give identical bytes.
///
/// mean-histogram: bars of the mean-score histogram on a logarithmic count
/// axis; zero-count bins stay empty. rank-scatter: every episode score as a
/// dot at its sample's rank, the per-sample means as a monotone polyline,
/// and the top-fraction episodes in a highlight color. variance-vs-mean:
/// one dot per sample at (mean, variance).
std::string render_svg(ScoreMatrixView scores, const ArchitectureReport& stats,
                       const PlotSpec& plot);

/// Same, written to a file.
void render_svg(ScoreMatrixView scores, const ArchitectureReport& stats,
                const PlotSpec& plot, const std::filesystem::path& destination);

}  // namespace rwg
