#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "rwg/csv.hpp"
#include "rwg/format.hpp"
#include "rwg/rng.hpp"
#include "rwg/stats.hpp"
#include "rwg/svg.hpp"
#include "rwg/tensor_io.hpp"

namespace {

rwg::ScoreTensor random_tensor(rwg::SplitMix64& rng) {
    rwg::ScoreTensor t;
    const std::size_t n_arch = 1 + rng.next_u64() % 3;
    t.n_samples = 1 + rng.next_u64() % 6;
    t.n_episodes = 1 + rng.next_u64() % 5;
    t.architectures.push_back("0");
    for (std::size_t a = 1; a < n_arch; ++a)
        t.architectures.push_back(std::to_string(2 * a) + "x4:bias");
    t.env_name = rng.next_u64() % 2 ? "CartPole-v0" : "Pendulum-v0";
    t.master_seed = rng.next_u64();
    t.tool_version = "0.1.0";
    t.runtime_seconds.resize(n_arch);
    for (double& r : t.runtime_seconds) r = rng.next_uniform(0.0, 100.0);
    t.scores.resize(n_arch * t.n_samples * t.n_episodes);
    for (double& s : t.scores) s = rng.next_uniform(-500.0, 200.0);
    return t;
}

std::string serialize(const rwg::ScoreTensor& tensor) {
    std::ostringstream out(std::ios::binary);
    rwg::write_tensor(tensor, out);
    return out.str();
}

rwg::ScoreTensor parse(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return rwg::read_tensor(in);
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::bit_cast<std::uint64_t>(a[i]) !=
            std::bit_cast<std::uint64_t>(b[i]))
            return false;
    return true;
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

std::string error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& err) {
        return err.what();
    }
    return "";
}

std::filesystem::path test_dir(const std::string& name) {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "rwg-core-tests" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

/// Rows of a CSV file, each split on commas; the trailing newline is dropped.
std::vector<std::vector<std::string>> read_csv(
    const std::filesystem::path& path) {
    std::string text = read_file(path);
    REQUIRE(!text.empty());
    REQUIRE(text.back() == '\n');
    text.pop_back();
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : split(text, '\n'))
        rows.push_back(split(line, ','));
    return rows;
}

double reparse(const std::string& text) {
    return std::strtod(text.c_str(), nullptr);
}

}  // namespace

TEST_CASE("tensors survive a serialization round trip unchanged") {
    rwg::SplitMix64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        const rwg::ScoreTensor tensor = random_tensor(rng);
        const rwg::ScoreTensor back = parse(serialize(tensor));
        CHECK(back.env_name == tensor.env_name);
        CHECK(back.architectures == tensor.architectures);
        CHECK(back.n_samples == tensor.n_samples);
        CHECK(back.n_episodes == tensor.n_episodes);
        CHECK(back.master_seed == tensor.master_seed);
        CHECK(back.tool_version == tensor.tool_version);
        CHECK(back.runtime_seconds ==
              std::vector<double>(tensor.n_architectures(), 0.0));
        CHECK(same_bits(back.scores, tensor.scores));
    }
}

TEST_CASE("special values keep their exact bit patterns") {
    rwg::ScoreTensor tensor;
    tensor.env_name = "CartPole-v0";
    tensor.architectures = {"0"};
    tensor.n_samples = 2;
    tensor.n_episodes = 3;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {0.0};
    tensor.scores = {0.0,
                     -0.0,
                     std::numeric_limits<double>::denorm_min(),
                     std::numeric_limits<double>::max(),
                     -1e300,
                     std::numeric_limits<double>::quiet_NaN()};
    const rwg::ScoreTensor back = parse(serialize(tensor));
    CHECK(same_bits(back.scores, tensor.scores));
    CHECK(std::signbit(back.scores[1]));
}

TEST_CASE("serialization is deterministic and runtime-independent") {
    rwg::SplitMix64 rng(405);
    const rwg::ScoreTensor tensor = random_tensor(rng);
    const std::string first = serialize(tensor);
    CHECK(first == serialize(tensor));

    rwg::ScoreTensor busier = tensor;
    for (double& r : busier.runtime_seconds) r += 1234.5;
    CHECK(first == serialize(busier));

    // Writing what was read reproduces the original bytes.
    CHECK(first == serialize(parse(first)));
}

TEST_CASE("the wire layout is what the format says it is") {
    rwg::ScoreTensor tensor;
    tensor.env_name = "Pendulum-v0";
    tensor.architectures = {"4x4"};
    tensor.n_samples = 2;
    tensor.n_episodes = 3;
    tensor.master_seed = 7;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {9.75};
    tensor.scores = {-1.5, 0.0, 3.25, 10.0, -200.0, 0.125};
    const std::string bytes = serialize(tensor);

    REQUIRE(bytes.size() > 16);
    CHECK(bytes.substr(0, 4) == "RWGT");
    CHECK(bytes[4] == 1);  // version 1, little endian
    CHECK(bytes[5] == 0);
    CHECK(bytes[6] == 0);
    CHECK(bytes[7] == 0);

    std::uint64_t meta_len = 0;
    for (int i = 0; i < 8; ++i)
        meta_len |= std::uint64_t{
                        static_cast<unsigned char>(bytes[8 + i])}
                    << (8 * i);
    CHECK(bytes.size() == 16 + meta_len + 8 * tensor.scores.size());

    const std::string meta = bytes.substr(16, meta_len);
    CHECK(meta.front() == '{');
    CHECK(meta.back() == '}');
    // Keys are serialized in sorted order, runtimes zeroed.
    std::size_t last = 0;
    for (const char* key : {"\"architectures\"", "\"env\"", "\"master_seed\"",
                            "\"n_episodes\"", "\"n_samples\"",
                            "\"runtime_seconds\"", "\"tool_version\""}) {
        const std::size_t pos = meta.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos > last);
        last = pos;
    }
    CHECK(meta.find("\"runtime_seconds\":[0.0]") != std::string::npos);
    CHECK(meta.find("9.75") == std::string::npos);

    for (std::size_t i = 0; i < tensor.scores.size(); ++i) {
        std::uint64_t word = 0;
        for (int b = 0; b < 8; ++b)
            word |= std::uint64_t{static_cast<unsigned char>(
                        bytes[16 + meta_len + 8 * i + b])}
                    << (8 * b);
        CHECK(word == std::bit_cast<std::uint64_t>(tensor.scores[i]));
    }
}

TEST_CASE("malformed tensor bytes raise precise errors") {
    rwg::SplitMix64 rng(406);
    const rwg::ScoreTensor tensor = random_tensor(rng);
    const std::string good = serialize(tensor);

    SUBCASE("flipped magic") {
        std::string bad = good;
        bad[0] = 'X';
        CHECK_THROWS_AS((void)parse(bad), rwg::BadMagicError);
    }
    SUBCASE("empty stream") {
        CHECK_THROWS_AS((void)parse(""), rwg::BadMagicError);
    }
    SUBCASE("unsupported version") {
        std::string bad = good;
        bad[4] = 2;
        CHECK_THROWS_AS((void)parse(bad), rwg::UnsupportedVersionError);
        const std::string msg = error_message([&] { (void)parse(bad); });
        CHECK(msg.find("version 2") != std::string::npos);
    }
    SUBCASE("truncated header") {
        const std::string bad = good.substr(0, 10);
        CHECK_THROWS_AS((void)parse(bad), rwg::TruncatedPayloadError);
    }
    SUBCASE("truncated metadata") {
        const std::string bad = good.substr(0, 20);
        CHECK_THROWS_AS((void)parse(bad), rwg::TruncatedPayloadError);
    }
    SUBCASE("truncated payload names the byte counts") {
        const std::string bad = good.substr(0, good.size() - 5);
        CHECK_THROWS_AS((void)parse(bad), rwg::TruncatedPayloadError);
        const std::string msg = error_message([&] { (void)parse(bad); });
        const std::size_t expected = 8 * tensor.scores.size();
        CHECK(msg.find("expected " + std::to_string(expected)) !=
              std::string::npos);
        CHECK(msg.find("got " + std::to_string(expected - 5)) !=
              std::string::npos);
    }
    SUBCASE("metadata is not JSON") {
        // Keep the declared length, trash the content.
        std::string bad = good;
        bad[16] = '#';
        CHECK_THROWS_AS((void)parse(bad), rwg::TensorFormatError);
    }
    SUBCASE("metadata misses a field") {
        const std::string meta = R"({"env":"CartPole-v0"})";
        std::string bad = "RWGT";
        bad += '\x01';
        bad += std::string(3, '\0');
        bad += static_cast<char>(meta.size());
        bad += std::string(7, '\0');
        bad += meta;
        CHECK_THROWS_AS((void)parse(bad), rwg::TensorFormatError);
        const std::string msg = error_message([&] { (void)parse(bad); });
        CHECK(msg.find("architectures") != std::string::npos);
    }
    SUBCASE("trailing bytes") {
        const std::string bad = good + "junk";
        CHECK_THROWS_AS((void)parse(bad), rwg::TensorFormatError);
    }
    SUBCASE("inconsistent metadata dimensions") {
        // Declares one sample too many for the payload it carries.
        rwg::ScoreTensor lying = tensor;
        lying.n_samples += 1;
        CHECK_THROWS_AS((void)serialize(lying), rwg::DimensionMismatchError);
    }
}

TEST_CASE("tensor file overloads match the stream behaviour") {
    const std::filesystem::path dir = test_dir("tensor-files");
    rwg::SplitMix64 rng(407);
    const rwg::ScoreTensor tensor = random_tensor(rng);

    const std::filesystem::path path = dir / "scores.rwgt";
    const std::size_t written = rwg::write_tensor(tensor, path);
    CHECK(written == std::filesystem::file_size(path));
    CHECK(read_file(path) == serialize(tensor));

    const rwg::ScoreTensor back = rwg::read_tensor(path);
    CHECK(same_bits(back.scores, tensor.scores));

    CHECK_THROWS_AS((void)rwg::read_tensor(dir / "absent.rwgt"), rwg::IoError);
    CHECK_THROWS_AS((void)rwg::write_tensor(tensor, dir / "no-such-dir" /
                                                        "scores.rwgt"),
                    rwg::IoError);
}

TEST_CASE("CSV emission round-trips every number exactly") {
    const std::filesystem::path dir = test_dir("csv");
    rwg::ScoreTensor tensor;
    tensor.env_name = "Pendulum-v0";
    tensor.architectures = {"0", "4x4:bias"};
    tensor.n_samples = 30;
    tensor.n_episodes = 5;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {1.0, 2.0};
    tensor.scores.resize(2 * 30 * 5);
    rwg::SplitMix64 rng(408);
    for (double& s : tensor.scores) s = rng.next_uniform(-1600.0, -100.0);

    rwg::AnalysisOptions options;
    options.n_bins = 8;
    const rwg::AnalysisReport report = rwg::analyze(tensor, -900.0, options);
    REQUIRE(report.architectures[0].solve_fraction > 0.0);
    REQUIRE(report.architectures[1].solve_fraction > 0.0);
    const auto paths = rwg::emit_csv(report, tensor, dir);

    REQUIRE(paths.size() == 6);
    CHECK(paths[0].filename() == "Pendulum-v0_0_samples.csv");
    CHECK(paths[1].filename() == "Pendulum-v0_0_histogram.csv");
    CHECK(paths[2].filename() == "Pendulum-v0_0_summary.csv");
    CHECK(paths[3].filename() == "Pendulum-v0_4x4-bias_samples.csv");
    CHECK(paths[4].filename() == "Pendulum-v0_4x4-bias_histogram.csv");
    CHECK(paths[5].filename() == "Pendulum-v0_4x4-bias_summary.csv");

    for (std::size_t a = 0; a < 2; ++a) {
        const rwg::ArchitectureReport& arch = report.architectures[a];

        const auto samples = read_csv(paths[3 * a]);
        REQUIRE(samples.size() == 31);
        CHECK(samples[0] ==
              std::vector<std::string>{"n", "mean", "variance", "rank"});
        for (std::size_t n = 0; n < 30; ++n) {
            const auto& row = samples[n + 1];
            REQUIRE(row.size() == 4);
            CHECK(row[0] == std::to_string(n));
            CHECK(reparse(row[1]) == arch.samples[n].mean);
            CHECK(reparse(row[2]) == arch.samples[n].variance);
            CHECK(row[3] == std::to_string(arch.samples[n].rank));
        }

        const auto hist = read_csv(paths[3 * a + 1]);
        REQUIRE(hist.size() == 9);
        CHECK(hist[0] ==
              std::vector<std::string>{"edge_lo", "edge_hi", "count"});
        for (std::size_t b = 0; b < 8; ++b) {
            const auto& row = hist[b + 1];
            REQUIRE(row.size() == 3);
            CHECK(reparse(row[0]) == arch.mean_histogram.bin_edges[b]);
            CHECK(reparse(row[1]) == arch.mean_histogram.bin_edges[b + 1]);
            CHECK(row[2] == std::to_string(arch.mean_histogram.counts[b]));
        }

        const auto summary = read_csv(paths[3 * a + 2]);
        REQUIRE(summary.size() == 2);
        CHECK(summary[0] == std::vector<std::string>{
                                "best_mean", "percentile_999", "solve_fraction",
                                "expected_waiting_time"});
        REQUIRE(summary[1].size() == 4);
        CHECK(reparse(summary[1][0]) == arch.best_mean);
        CHECK(reparse(summary[1][1]) == arch.percentile_999);
        CHECK(reparse(summary[1][2]) == arch.solve_fraction);
        CHECK(reparse(summary[1][3]) == 1.0 / arch.solve_fraction);
    }

    // Emitting again produces identical bytes.
    const std::string before = read_file(paths[0]);
    rwg::emit_csv(report, tensor, dir);
    CHECK(read_file(paths[0]) == before);
}

TEST_CASE("CSV summary writes inf when nothing solves") {
    const std::filesystem::path dir = test_dir("csv-inf");
    rwg::ScoreTensor tensor;
    tensor.env_name = "CartPole-v0";
    tensor.architectures = {"0"};
    tensor.n_samples = 4;
    tensor.n_episodes = 2;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {0.0};
    tensor.scores = {10.0, 12.0, 9.0, 11.0, 8.0, 10.0, 13.0, 7.0};

    const rwg::AnalysisReport report = rwg::analyze(tensor, 195.0);
    REQUIRE(report.architectures[0].solve_fraction == 0.0);
    const auto paths = rwg::emit_csv(report, tensor, dir);
    const auto summary = read_csv(paths[2]);
    CHECK(summary[1][3] == "inf");
}

TEST_CASE("CSV emission rejects mismatched inputs before writing") {
    const std::filesystem::path dir = test_dir("csv-reject");
    rwg::SplitMix64 rng(409);
    const rwg::ScoreTensor tensor = random_tensor(rng);
    const rwg::AnalysisReport report = rwg::analyze(tensor, 0.0);

    rwg::AnalysisReport empty = report;
    empty.architectures.clear();
    CHECK_THROWS_AS((void)rwg::emit_csv(empty, tensor, dir),
                    rwg::EmptyInputError);

    rwg::AnalysisReport wrong = report;
    wrong.n_samples += 1;
    CHECK_THROWS_AS((void)rwg::emit_csv(wrong, tensor, dir),
                    rwg::DimensionMismatchError);

    wrong = report;
    wrong.env_name = "MountainCar-v0";
    CHECK_THROWS_AS((void)rwg::emit_csv(wrong, tensor, dir),
                    rwg::DimensionMismatchError);

    wrong = report;
    wrong.architectures[0].samples.pop_back();
    CHECK_THROWS_AS((void)rwg::emit_csv(wrong, tensor, dir),
                    rwg::DimensionMismatchError);

    CHECK(std::filesystem::is_empty(dir));
}

TEST_CASE("format_double is shortest round-trip, file_safe renames bias") {
    for (const double v : {0.0, 1.0, -1.5, 200.0, 2.0 / 3.0, 1e-12, -3.25e17,
                           199.99999999999997}) {
        const std::string text = rwg::format_double(v);
        CHECK(reparse(text) == v);
    }
    CHECK(rwg::format_double(200.0) == "200");
    CHECK(rwg::format_double(0.5) == "0.5");
    CHECK(rwg::format_double(-0.1) == "-0.1");

    CHECK(rwg::file_safe("4x4:bias") == "4x4-bias");
    CHECK(rwg::file_safe("0") == "0");
    CHECK(rwg::file_safe("CartPole-v0") == "CartPole-v0");
}

TEST_CASE("plot kinds and spec validation") {
    CHECK(rwg::to_string(rwg::PlotKind::kMeanHistogram) == "mean-histogram");
    CHECK(rwg::to_string(rwg::PlotKind::kRankScatter) == "rank-scatter");
    CHECK(rwg::to_string(rwg::PlotKind::kVarianceVsMean) == "variance-vs-mean");

    rwg::PlotSpec spec;
    spec.kind = rwg::PlotKind::kRankScatter;
    spec.x_min = 0.0;
    spec.x_max = 10.0;
    spec.y_min = -5.0;
    spec.y_max = 5.0;
    spec.validate();

    rwg::PlotSpec bad = spec;
    bad.x_max = bad.x_min;
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);

    bad = spec;
    bad.y_min = std::nan("");
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);

    bad = spec;
    bad.x_min = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);

    bad = spec;
    bad.highlight_fraction = 0.0;
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);

    bad = spec;
    bad.highlight_fraction = 1.5;
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);

    // Log count axis cannot start at zero.
    bad = spec;
    bad.kind = rwg::PlotKind::kMeanHistogram;
    bad.y_min = 0.0;
    CHECK_THROWS_AS(bad.validate(), rwg::InvalidPlotSpecError);
}

TEST_CASE("plots carry one mark per data point") {
    rwg::ScoreTensor tensor;
    tensor.env_name = "CartPole-v0";
    tensor.architectures = {"4"};
    tensor.n_samples = 40;
    tensor.n_episodes = 5;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {0.0};
    tensor.scores.resize(40 * 5);
    rwg::SplitMix64 rng(410);
    for (double& s : tensor.scores) s = rng.next_uniform(5.0, 200.0);

    rwg::AnalysisOptions options;
    options.n_bins = 12;
    options.top_fraction = 0.02;  // floor(0.02 * 200) = 4 episodes
    const rwg::AnalysisReport report = rwg::analyze(tensor, 195.0, options);
    const rwg::ArchitectureReport& arch = report.architectures[0];
    const rwg::ScoreMatrixView scores = tensor.architecture_scores(0);

    SUBCASE("mean histogram bars") {
        const rwg::PlotSpec spec = rwg::default_plot_spec(
            rwg::PlotKind::kMeanHistogram, scores, arch);
        CHECK(spec.x_min == arch.mean_histogram.bin_edges.front());
        CHECK(spec.x_max == arch.mean_histogram.bin_edges.back());
        CHECK(spec.y_min == 0.5);
        const std::string svg = rwg::render_svg(scores, arch, spec);
        CHECK(svg == rwg::render_svg(scores, arch, spec));
        std::size_t nonzero = 0;
        for (const std::size_t c : arch.mean_histogram.counts)
            if (c > 0) ++nonzero;
        CHECK(count_occurrences(svg, "<rect class=\"bar\"") == nonzero);
        CHECK(svg.find("</svg>") != std::string::npos);
    }

    SUBCASE("rank scatter marks") {
        rwg::PlotSpec spec = rwg::default_plot_spec(rwg::PlotKind::kRankScatter,
                                                    scores, arch);
        spec.highlight_fraction = options.top_fraction;
        const std::string svg = rwg::render_svg(scores, arch, spec);
        CHECK(count_occurrences(svg, "<circle class=\"pt") == 40 * 5);
        CHECK(count_occurrences(svg, "class=\"pt top\"") == 4);
        CHECK(count_occurrences(svg, "#27a327") == 4);
        CHECK(count_occurrences(svg, "<polyline class=\"mean\"") == 1);
    }

    SUBCASE("variance scatter marks") {
        const rwg::PlotSpec spec = rwg::default_plot_spec(
            rwg::PlotKind::kVarianceVsMean, scores, arch);
        const std::string svg = rwg::render_svg(scores, arch, spec);
        CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 40);
    }

    SUBCASE("file overload writes the same bytes") {
        const std::filesystem::path dir = test_dir("svg");
        const rwg::PlotSpec spec = rwg::default_plot_spec(
            rwg::PlotKind::kVarianceVsMean, scores, arch);
        rwg::render_svg(scores, arch, spec, dir / "plot.svg");
        CHECK(read_file(dir / "plot.svg") ==
              rwg::render_svg(scores, arch, spec));
    }

    SUBCASE("mismatched stats are rejected") {
        rwg::ArchitectureReport chopped = arch;
        chopped.samples.pop_back();
        const rwg::PlotSpec spec = rwg::default_plot_spec(
            rwg::PlotKind::kVarianceVsMean, scores, chopped);
        CHECK_THROWS_AS((void)rwg::render_svg(scores, chopped, spec),
                        rwg::DimensionMismatchError);
    }
}

TEST_CASE("constant scores render as a flat polyline") {
    rwg::ScoreTensor tensor;
    tensor.env_name = "MountainCar-v0";
    tensor.architectures = {"0"};
    tensor.n_samples = 6;
    tensor.n_episodes = 3;
    tensor.tool_version = "0.1.0";
    tensor.runtime_seconds = {0.0};
    tensor.scores.assign(18, -200.0);

    const rwg::AnalysisReport report = rwg::analyze(tensor, -110.0);
    const rwg::ArchitectureReport& arch = report.architectures[0];
    const rwg::ScoreMatrixView scores = tensor.architecture_scores(0);

    const rwg::PlotSpec spec =
        rwg::default_plot_spec(rwg::PlotKind::kRankScatter, scores, arch);
    CHECK(spec.y_min == -200.5);
    CHECK(spec.y_max == -199.5);
    const std::string svg = rwg::render_svg(scores, arch, spec);
    // Every episode sits mid-axis: y = 550 + 0.5 * (40 - 550) = 295.
    CHECK(count_occurrences(svg, "cy=\"295.00\"") == 18);
    CHECK(count_occurrences(svg, ",295.00") == 6);  // polyline vertices
}
