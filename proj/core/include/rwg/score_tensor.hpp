#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwg/errors.hpp"

namespace rwg {

/// Read-only view of one architecture's scores, indexed [sample][episode].
class ScoreMatrixView {
public:
    ScoreMatrixView(std::span<const double> data, std::size_t n_samples,
                    std::size_t n_episodes)
        : data_(data), n_samples_(n_samples), n_episodes_(n_episodes) {
        if (data.size() != n_samples * n_episodes)
            throw DimensionMismatchError("score matrix size mismatch");
    }

    std::size_t n_samples() const { return n_samples_; }
    std::size_t n_episodes() const { return n_episodes_; }
    std::span<const double> flat() const { return data_; }

    double operator()(std::size_t n, std::size_t e) const {
        return data_[n * n_episodes_ + e];
    }

    std::span<const double> sample(std::size_t n) const {
        return data_.subspan(n * n_episodes_, n_episodes_);
    }

private:
    std::span<const double> data_;
    std::size_t n_samples_;
    std::size_t n_episodes_;
};

/// Scores of a full run, indexed [architecture][sample][episode] with the
/// episode axis fastest, plus the metadata identifying the run.
struct ScoreTensor {
    std::string env_name;
    std::vector<std::string> architectures;
    std::size_t n_samples = 0;
    std::size_t n_episodes = 0;
    std::uint64_t master_seed = 0;
    std::string tool_version;
    /// Wall-clock seconds per architecture. Zeroed when persisted so files
    /// from identical runs are byte-identical regardless of machine load.
    std::vector<double> runtime_seconds;
    std::vector<double> scores;

    std::size_t n_architectures() const { return architectures.size(); }

    std::size_t flat_index(std::size_t a, std::size_t n, std::size_t e) const {
        return (a * n_samples + n) * n_episodes + e;
    }

    double at(std::size_t a, std::size_t n, std::size_t e) const {
        return scores[flat_index(a, n, e)];
    }
    double& at(std::size_t a, std::size_t n, std::size_t e) {
        return scores[flat_index(a, n, e)];
    }

    ScoreMatrixView architecture_scores(std::size_t a) const {
        return ScoreMatrixView(
            std::span<const double>(scores).subspan(
                a * n_samples * n_episodes, n_samples * n_episodes),
            n_samples, n_episodes);
    }

    /// Throws DimensionMismatchError unless all sizes are consistent.
    void validate() const;
};

}  // namespace rwg
