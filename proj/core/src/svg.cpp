#include "rwg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "rwg/stats.hpp"

namespace rwg {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 880.0;
constexpr double kBottom = 550.0;
constexpr double kTop = 40.0;

/// Pixel coordinate, two decimals.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Data-space label, six significant digits.
std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Frame {
    PlotSpec spec;
    bool log_y = false;

    double x(double v) const {
        return kLeft + (v - spec.x_min) / (spec.x_max - spec.x_min) *
                           (kRight - kLeft);
    }
    double y(double v) const {
        const double t =
            log_y ? (std::log10(v) - std::log10(spec.y_min)) /
                        (std::log10(spec.y_max) - std::log10(spec.y_min))
                  : (v - spec.y_min) / (spec.y_max - spec.y_min);
        return kBottom + t * (kTop - kBottom);
    }
};

void append_header(std::string& out, const std::string& title) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" "
           "height=\"600\" viewBox=\"0 0 900 600\">\n";
    out += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"900\" height=\"600\" "
           "fill=\"#ffffff\"/>\n";
    out += "<text x=\"" + px(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"14\" fill=\"#202020\">" +
           title + "</text>\n";
}

void append_axis_labels(std::string& out, const std::string& x_label,
                        const std::string& y_label) {
    out += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"" +
           px(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"12\" fill=\"#202020\">" +
           x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + px((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"12\" fill=\"#202020\" transform=\"rotate(-90 16 " +
           px((kTop + kBottom) / 2) + ")\">" + y_label + "</text>\n";
}

void append_x_ticks(std::string& out, const Frame& frame) {
    for (int i = 0; i <= 4; ++i) {
        const double v =
            frame.spec.x_min + (frame.spec.x_max - frame.spec.x_min) * i / 4.0;
        const std::string xp = px(frame.x(v));
        out += "<line x1=\"" + xp + "\" y1=\"" + px(kBottom) + "\" x2=\"" + xp +
               "\" y2=\"" + px(kBottom + 5) +
               "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + xp + "\" y=\"" + px(kBottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" "
               "font-size=\"11\" fill=\"#202020\">" +
               label(v) + "</text>\n";
    }
}

void append_y_ticks_linear(std::string& out, const Frame& frame) {
    for (int i = 0; i <= 4; ++i) {
        const double v =
            frame.spec.y_min + (frame.spec.y_max - frame.spec.y_min) * i / 4.0;
        const std::string yp = px(frame.y(v));
        out += "<line x1=\"" + px(kLeft - 5) + "\" y1=\"" + yp + "\" x2=\"" +
               px(kLeft) + "\" y2=\"" + yp +
               "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + px(kLeft - 9) + "\" y=\"" + px(frame.y(v) + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" "
               "font-size=\"11\" fill=\"#202020\">" +
               label(v) + "</text>\n";
    }
}

void append_y_ticks_log(std::string& out, const Frame& frame) {
    const int lo = static_cast<int>(std::ceil(std::log10(frame.spec.y_min)));
    const int hi = static_cast<int>(std::floor(std::log10(frame.spec.y_max)));
    for (int k = lo; k <= hi; ++k) {
        const double v = std::pow(10.0, k);
        const std::string yp = px(frame.y(v));
        out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + yp + "\" x2=\"" +
               px(kRight) + "\" y2=\"" + yp +
               "\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + px(kLeft - 9) + "\" y=\"" + px(frame.y(v) + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" "
               "font-size=\"11\" fill=\"#202020\">" +
               label(v) + "</text>\n";
    }
}

void append_axes(std::string& out) {
    out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop) + "\" x2=\"" +
           px(kLeft) + "\" y2=\"" + px(kBottom) +
           "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kBottom) + "\" x2=\"" +
           px(kRight) + "\" y2=\"" + px(kBottom) +
           "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
}

std::string render_mean_histogram(const ArchitectureReport& stats,
                                  const PlotSpec& plot) {
    const Histogram& h = stats.mean_histogram;
    if (h.counts.empty()) throw EmptyInputError("stats carry no histogram");
    Frame frame{plot, true};

    std::string out;
    append_header(out, to_string(plot.kind) + " " + stats.architecture);
    append_y_ticks_log(out, frame);
    append_axes(out);
    append_x_ticks(out, frame);
    append_axis_labels(out, "mean score", "count (log scale)");

    out += "<g class=\"data\">\n";
    for (std::size_t b = 0; b < h.bins(); ++b) {
        if (h.counts[b] == 0) continue;
        const double x0 = frame.x(h.bin_edges[b]);
        const double x1 = frame.x(h.bin_edges[b + 1]);
        const double y1 = frame.y(static_cast<double>(h.counts[b]));
        out += "<rect class=\"bar\" x=\"" + px(x0) + "\" y=\"" + px(y1) +
               "\" width=\"" + px(x1 - x0) + "\" height=\"" +
               px(kBottom - y1) +
               "\" fill=\"#5b8cb8\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_rank_scatter(ScoreMatrixView scores,
                                const ArchitectureReport& stats,
                                const PlotSpec& plot) {
    Frame frame{plot, false};
    const std::size_t n_samples = scores.n_samples();
    const std::size_t n_episodes = scores.n_episodes();

    std::vector<char> is_top(n_samples * n_episodes, 0);
    for (const EpisodeRef& ref :
         top_fraction_episodes(scores, plot.highlight_fraction))
        is_top[ref.sample * n_episodes + ref.episode] = 1;

    std::vector<double> mean_by_rank(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        if (stats.samples[n].rank >= n_samples)
            throw DimensionMismatchError("sample rank out of range");
        mean_by_rank[stats.samples[n].rank] = stats.samples[n].mean;
    }

    std::string out;
    append_header(out, to_string(plot.kind) + " " + stats.architecture);
    append_axes(out);
    append_x_ticks(out, frame);
    append_y_ticks_linear(out, frame);
    append_axis_labels(out, "rank", "episode score");

    out += "<g class=\"data\">\n";
    for (std::size_t n = 0; n < n_samples; ++n) {
        const double xp = frame.x(static_cast<double>(stats.samples[n].rank));
        for (std::size_t e = 0; e < n_episodes; ++e) {
            const bool top = is_top[n * n_episodes + e] != 0;
            out += "<circle class=\"pt";
            if (top) out += " top";
            out += "\" cx=\"" + px(xp) + "\" cy=\"" + px(frame.y(scores(n, e))) +
                   "\" r=\"2\" fill=\"";
            out += top ? "#27a327" : "#9aa7b4";
            out += "\"/>\n";
        }
    }
    out += "<polyline class=\"mean\" fill=\"none\" stroke=\"#202020\" "
           "stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < n_samples; ++r) {
        if (r > 0) out += ' ';
        out += px(frame.x(static_cast<double>(r))) + ',' +
               px(frame.y(mean_by_rank[r]));
    }
    out += "\"/>\n</g>\n</svg>\n";
    return out;
}

std::string render_variance_vs_mean(const ArchitectureReport& stats,
                                    const PlotSpec& plot) {
    Frame frame{plot, false};
    std::string out;
    append_header(out, to_string(plot.kind) + " " + stats.architecture);
    append_axes(out);
    append_x_ticks(out, frame);
    append_y_ticks_linear(out, frame);
    append_axis_labels(out, "mean score", "score variance");

    out += "<g class=\"data\">\n";
    for (const SampleStats& s : stats.samples)
        out += "<circle class=\"pt\" cx=\"" + px(frame.x(s.mean)) + "\" cy=\"" +
               px(frame.y(s.variance)) + "\" r=\"2\" fill=\"#5b8cb8\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

/// Widens a degenerate range so the spec stays valid.
void widen_if_flat(double& lo, double& hi) {
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
}

}  // namespace

std::string to_string(PlotKind kind) {
    switch (kind) {
        case PlotKind::kMeanHistogram: return "mean-histogram";
        case PlotKind::kRankScatter: return "rank-scatter";
        case PlotKind::kVarianceVsMean: return "variance-vs-mean";
    }
    throw InvalidPlotSpecError("unknown plot kind");
}

void PlotSpec::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_min) || !std::isfinite(y_max))
        throw InvalidPlotSpecError("plot axis ranges must be finite");
    if (!(x_min < x_max) || !(y_min < y_max))
        throw InvalidPlotSpecError("plot axis ranges must be non-empty");
    if (!(highlight_fraction > 0.0 && highlight_fraction <= 1.0))
        throw InvalidPlotSpecError("highlight fraction must be in (0, 1]");
    if (kind == PlotKind::kMeanHistogram && y_min <= 0.0)
        throw InvalidPlotSpecError("log count axis needs y_min > 0");
}

PlotSpec default_plot_spec(PlotKind kind, ScoreMatrixView scores,
                           const ArchitectureReport& stats) {
    PlotSpec spec;
    spec.kind = kind;
    switch (kind) {
        case PlotKind::kMeanHistogram: {
            const Histogram& h = stats.mean_histogram;
            if (h.counts.empty()) throw EmptyInputError("stats carry no histogram");
            spec.x_min = h.bin_edges.front();
            spec.x_max = h.bin_edges.back();
            spec.y_min = 0.5;
            spec.y_max = static_cast<double>(
                *std::max_element(h.counts.begin(), h.counts.end()));
            break;
        }
        case PlotKind::kRankScatter: {
            if (scores.n_samples() == 0 || scores.n_episodes() == 0)
                throw EmptyInputError("score slice is empty");
            spec.x_min = 0.0;
            spec.x_max = static_cast<double>(scores.n_samples() - 1);
            const auto flat = scores.flat();
            const auto [lo, hi] = std::minmax_element(flat.begin(), flat.end());
            spec.y_min = *lo;
            spec.y_max = *hi;
            widen_if_flat(spec.x_min, spec.x_max);
            widen_if_flat(spec.y_min, spec.y_max);
            break;
        }
        case PlotKind::kVarianceVsMean: {
            if (stats.samples.empty()) throw EmptyInputError("stats carry no samples");
            auto [mean_lo, mean_hi] = std::minmax_element(
                stats.samples.begin(), stats.samples.end(),
                [](const SampleStats& a, const SampleStats& b) {
                    return a.mean < b.mean;
                });
            auto [var_lo, var_hi] = std::minmax_element(
                stats.samples.begin(), stats.samples.end(),
                [](const SampleStats& a, const SampleStats& b) {
                    return a.variance < b.variance;
                });
            spec.x_min = mean_lo->mean;
            spec.x_max = mean_hi->mean;
            spec.y_min = var_lo->variance;
            spec.y_max = var_hi->variance;
            widen_if_flat(spec.x_min, spec.x_max);
            widen_if_flat(spec.y_min, spec.y_max);
            break;
        }
    }
    return spec;
}

std::string render_svg(ScoreMatrixView scores, const ArchitectureReport& stats,
                       const PlotSpec& plot) {
    plot.validate();
    if (stats.samples.size() != scores.n_samples())
        throw DimensionMismatchError("stats do not match the score slice");
    switch (plot.kind) {
        case PlotKind::kMeanHistogram: return render_mean_histogram(stats, plot);
        case PlotKind::kRankScatter: return render_rank_scatter(scores, stats, plot);
        case PlotKind::kVarianceVsMean: return render_variance_vs_mean(stats, plot);
    }
    throw InvalidPlotSpecError("unknown plot kind");
}

void render_svg(ScoreMatrixView scores, const ArchitectureReport& stats,
                const PlotSpec& plot, const std::filesystem::path& destination) {
    const std::string svg = render_svg(scores, stats, plot);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + destination.string() + " for writing");
    out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!out) throw IoError("write failed: " + destination.string());
}

}  // namespace rwg
