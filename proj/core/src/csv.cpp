#include "rwg/csv.hpp"

#include <fstream>
#include <string>

#include "rwg/format.hpp"

namespace rwg {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> emit_csv(const AnalysisReport& report,
                                            const ScoreTensor& tensor,
                                            const std::filesystem::path& out_dir) {
    if (report.architectures.empty())
        throw EmptyInputError("report has no architectures");
    tensor.validate();
    if (report.architectures.size() != tensor.n_architectures() ||
        report.n_samples != tensor.n_samples ||
        report.n_episodes != tensor.n_episodes ||
        report.env_name != tensor.env_name)
        throw DimensionMismatchError("report was not derived from this tensor");
    for (const ArchitectureReport& arch : report.architectures)
        if (arch.samples.size() != tensor.n_samples)
            throw DimensionMismatchError("report sample stats do not match tensor");

    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> paths;
    for (const ArchitectureReport& arch : report.architectures) {
        const std::string stem =
            file_safe(report.env_name) + "_" + file_safe(arch.architecture);

        std::string samples = "n,mean,variance,rank\n";
        for (std::size_t n = 0; n < arch.samples.size(); ++n) {
            const SampleStats& s = arch.samples[n];
            samples += std::to_string(n) + ',' + format_double(s.mean) + ',' +
                       format_double(s.variance) + ',' + std::to_string(s.rank) +
                       '\n';
        }

        std::string histogram = "edge_lo,edge_hi,count\n";
        const Histogram& h = arch.mean_histogram;
        for (std::size_t b = 0; b < h.bins(); ++b)
            histogram += format_double(h.bin_edges[b]) + ',' +
                         format_double(h.bin_edges[b + 1]) + ',' +
                         std::to_string(h.counts[b]) + '\n';

        std::string summary =
            "best_mean,percentile_999,solve_fraction,expected_waiting_time\n";
        summary += format_double(arch.best_mean) + ',' +
                   format_double(arch.percentile_999) + ',' +
                   format_double(arch.solve_fraction) + ',';
        summary += arch.solve_fraction > 0.0
                       ? format_double(1.0 / arch.solve_fraction)
                       : "inf";
        summary += '\n';

        const auto emit = [&](const char* kind, const std::string& content) {
            std::filesystem::path path = out_dir / (stem + "_" + kind + ".csv");
            write_file(path, content);
            paths.push_back(std::move(path));
        };
        emit("samples", samples);
        emit("histogram", histogram);
        emit("summary", summary);
    }
    return paths;
}

}  // namespace rwg
