#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwg/env.hpp"
#include "rwg/policy.hpp"
#include "rwg/score_tensor.hpp"

namespace rwg {

/// Purpose tags for derived seeds, so weight sampling and episode resets
/// draw from disjoint streams.
inline constexpr std::uint64_t kSeedTagWeights = 1;
inline constexpr std::uint64_t kSeedTagEpisode = 2;

/// Stateless map from (master seed, purpose, coordinates) to a seed.
/// Weight seeds use e = 0 since weights are shared across episodes.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                          std::uint64_t a, std::uint64_t n, std::uint64_t e);

struct RunConfig {
    std::string env_name;
    std::vector<ArchitectureSpec> architectures;
    std::size_t n_samples = 10000;
    std::size_t n_episodes = 20;
    std::uint64_t master_seed = 0;
    /// 0 picks the hardware concurrency. Scores never depend on this.
    unsigned n_workers = 0;
};

/// Runs one episode to completion and returns the total score. Throws
/// NumericalError if any reward is non-finite.
double run_episode(Environment& env, Policy& policy, std::uint64_t episode_seed);

/// Same, constructing the environment and policy from their descriptions.
double run_episode(const std::string& env_name, const Architecture& arch,
                   const WeightVector& weights, std::uint64_t episode_seed);

/// Evaluates every (architecture, sample, episode) cell of the run. Work is
/// spread over workers by sample; the result is a pure function of the
/// config minus n_workers, except for the measured runtime_seconds.
ScoreTensor evaluate(const RunConfig& config);

}  // namespace rwg
