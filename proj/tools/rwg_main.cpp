#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwg/rwg.hpp"

namespace {

std::string action_space_text(const rwg::ActionSpace& space) {
    if (const auto* d = std::get_if<rwg::Discrete>(&space))
        return "Discrete(" + std::to_string(d->n) + ")";
    const auto& c = std::get<rwg::Continuous>(space);
    std::string out = "Continuous(";
    for (std::size_t i = 0; i < c.low.size(); ++i) {
        if (i > 0) out += ", ";
        out += "[" + rwg::format_double(c.low[i]) + ", " +
               rwg::format_double(c.high[i]) + "]";
    }
    return out + ")";
}

std::vector<rwg::ArchitectureSpec> parse_arch_list(const std::string& text) {
    std::vector<rwg::ArchitectureSpec> specs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        specs.push_back(rwg::ArchitectureSpec::parse(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return specs;
}

int cmd_envs() {
    for (const std::string& name : rwg::registered_environments()) {
        const rwg::EnvSpec spec = rwg::environment_spec(name);
        std::cout << name << "  obs_dim=" << spec.obs_dim
                  << "  actions=" << action_space_text(spec.action_space)
                  << "  max_steps=" << spec.max_steps
                  << "  solved=" << rwg::format_double(spec.solved_score)
                  << '\n';
    }
    return 0;
}

int cmd_evaluate(const rwg::RunConfig& config, const std::string& out_path) {
    const rwg::ScoreTensor tensor = rwg::evaluate(config);
    for (std::size_t a = 0; a < tensor.n_architectures(); ++a)
        std::cout << tensor.architectures[a] << ": "
                  << rwg::format_double(tensor.runtime_seconds[a]) << " s ("
                  << tensor.n_samples << " samples x " << tensor.n_episodes
                  << " episodes)\n";
    const std::size_t bytes = rwg::write_tensor(tensor, out_path);
    std::cout << "wrote " << out_path << " (" << bytes << " bytes)\n";
    return 0;
}

int cmd_analyze(const std::string& tensor_path, std::size_t bins,
                double top_frac, bool has_threshold, double threshold,
                const std::string& outdir, bool svg) {
    const rwg::ScoreTensor tensor = rwg::read_tensor(tensor_path);
    if (!has_threshold)
        threshold = rwg::environment_spec(tensor.env_name).solved_score;

    rwg::AnalysisOptions options;
    options.n_bins = bins;
    options.top_fraction = top_frac;
    const rwg::AnalysisReport report =
        rwg::analyze(tensor, threshold, options);

    const auto paths = rwg::emit_csv(report, tensor, outdir);
    std::vector<std::filesystem::path> svg_paths;
    if (svg) {
        for (std::size_t a = 0; a < tensor.n_architectures(); ++a) {
            const rwg::ScoreMatrixView scores = tensor.architecture_scores(a);
            const rwg::ArchitectureReport& arch = report.architectures[a];
            for (const rwg::PlotKind kind :
                 {rwg::PlotKind::kMeanHistogram, rwg::PlotKind::kRankScatter,
                  rwg::PlotKind::kVarianceVsMean}) {
                rwg::PlotSpec plot = rwg::default_plot_spec(kind, scores, arch);
                plot.highlight_fraction = top_frac;
                std::filesystem::path path =
                    std::filesystem::path(outdir) /
                    (rwg::file_safe(tensor.env_name) + "_" +
                     rwg::file_safe(arch.architecture) + "_" +
                     rwg::to_string(kind) + ".svg");
                rwg::render_svg(scores, arch, plot, path);
                svg_paths.push_back(std::move(path));
            }
        }
    }

    std::cout << "env " << report.env_name << "  samples " << report.n_samples
              << "  episodes " << report.n_episodes << "  threshold "
              << rwg::format_double(report.solve_threshold) << '\n';
    for (const rwg::ArchitectureReport& arch : report.architectures) {
        std::cout << arch.architecture << ": best_mean "
                  << rwg::format_double(arch.best_mean) << "  p999 "
                  << rwg::format_double(arch.percentile_999) << "  solve "
                  << rwg::format_double(arch.solve_fraction) << "  waiting ";
        std::cout << (arch.solve_fraction > 0.0
                          ? rwg::format_double(1.0 / arch.solve_fraction)
                          : "inf");
        std::cout << '\n';
    }
    std::cout << "wrote " << paths.size() << " csv";
    if (svg) std::cout << " and " << svg_paths.size() << " svg";
    std::cout << " files to " << outdir << '\n';
    return 0;
}

int cmd_solve_prob(const std::string& tensor_path, double threshold,
                   bool has_n, std::uint64_t n) {
    const rwg::ScoreTensor tensor = rwg::read_tensor(tensor_path);
    if (!has_n) n = tensor.n_samples;
    for (std::size_t a = 0; a < tensor.n_architectures(); ++a) {
        const std::vector<double> means =
            rwg::mean_scores(tensor.architecture_scores(a));
        const double p = rwg::solve_probability(means, threshold);
        std::cout << tensor.architectures[a] << ": p=" << rwg::format_double(p)
                  << " success(n=" << n
                  << ")=" << rwg::format_double(rwg::success_probability(p, n))
                  << " waiting=";
        std::cout << (p > 0.0 ? rwg::format_double(rwg::expected_waiting_time(p))
                              : "inf");
        std::cout << '\n';
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"benchmark-complexity profiling with random weight guessing"};
    app.require_subcommand(1);

    CLI::App* envs = app.add_subcommand("envs", "list registered environments");

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "sample random policies and write a score tensor");
    std::string env_name;
    std::string arch_text = "0,4,4x4";
    rwg::RunConfig config;
    std::string out_path;
    evaluate->add_option("--env", env_name, "environment name")->required();
    evaluate->add_option("--arch", arch_text,
                         "comma-separated architectures, layer widths joined "
                         "with 'x', optional ':bias' suffix");
    evaluate->add_option("--samples", config.n_samples, "networks per architecture");
    evaluate->add_option("--episodes", config.n_episodes, "episodes per network");
    evaluate->add_option("--seed", config.master_seed, "master seed");
    evaluate->add_option("--workers", config.n_workers,
                         "worker threads, 0 = hardware concurrency (affects "
                         "wall-clock only)");
    evaluate->add_option("--out", out_path, "output .rwgt path")->required();

    CLI::App* analyze =
        app.add_subcommand("analyze", "derive statistics and artifacts from a tensor");
    std::string analyze_path;
    std::size_t bins = 40;
    double top_frac = 0.001;
    double threshold = 0.0;
    std::string outdir = "rwg-report";
    bool svg = false;
    analyze->add_option("file", analyze_path, ".rwgt tensor file")->required();
    analyze->add_option("--bins", bins, "histogram bins");
    analyze->add_option("--top-frac", top_frac, "highlighted episode fraction");
    CLI::Option* threshold_opt = analyze->add_option(
        "--threshold", threshold, "solve threshold (default: the environment's)");
    analyze->add_option("--outdir", outdir, "artifact directory");
    analyze->add_flag("--svg", svg, "also render SVG plots");

    CLI::App* solve =
        app.add_subcommand("solve-prob", "solve-probability analytics from a tensor");
    std::string solve_path;
    double solve_threshold = 0.0;
    std::uint64_t solve_n = 0;
    solve->add_option("file", solve_path, ".rwgt tensor file")->required();
    solve->add_option("--threshold", solve_threshold, "solve threshold")->required();
    CLI::Option* n_opt =
        solve->add_option("--n", solve_n, "sample budget (default: tensor samples)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n\n" << app.help();
        return 1;
    }

    if (*envs) return cmd_envs();
    if (*evaluate) {
        try {
            config.architectures = parse_arch_list(arch_text);
        } catch (const rwg::InvalidArchitectureError& err) {
            std::cerr << err.what() << "\n\n" << app.help();
            return 1;
        }
        config.env_name = env_name;
        return cmd_evaluate(config, out_path);
    }
    if (*analyze)
        return cmd_analyze(analyze_path, bins, top_frac,
                           threshold_opt->count() > 0, threshold, outdir, svg);
    return cmd_solve_prob(solve_path, solve_threshold, n_opt->count() > 0,
                          solve_n);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
}
