#include "rwg/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "rwg/version.hpp"

namespace rwg {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                          std::uint64_t a, std::uint64_t n, std::uint64_t e) {
    const std::uint64_t counter = tag + a * 0x9E3779B97F4A7C15ull +
                                  n * 0xC2B2AE3D27D4EB4Full +
                                  e * 0x165667B19E3779F9ull;
    return mix64(master + mix64(counter));
}

double run_episode(Environment& env, Policy& policy,
                   std::uint64_t episode_seed) {
    std::vector<double> obs;
    env.reset(episode_seed, obs);
    Action action;
    StepResult result;
    double total = 0.0;
    while (!env.done()) {
        policy.act(obs, action);
        env.step(action, result);
        if (!std::isfinite(result.reward))
            throw NumericalError("non-finite reward in " + env.spec().name +
                                 " at step " + std::to_string(env.step_count()));
        total += result.reward;
        std::swap(obs, result.observation);
    }
    return total;
}

double run_episode(const std::string& env_name, const Architecture& arch,
                   const WeightVector& weights, std::uint64_t episode_seed) {
    const auto env = make_environment(env_name);
    Policy policy(arch, weights);
    return run_episode(*env, policy, episode_seed);
}

ScoreTensor evaluate(const RunConfig& config) {
    if (config.architectures.empty())
        throw EmptyInputError("no architectures to evaluate");
    if (config.n_samples == 0 || config.n_episodes == 0)
        throw EmptyInputError("n_samples and n_episodes must be positive");
    const EnvSpec env_spec = environment_spec(config.env_name);

    ScoreTensor tensor;
    tensor.env_name = config.env_name;
    for (const ArchitectureSpec& spec : config.architectures)
        tensor.architectures.push_back(spec.to_string());
    tensor.n_samples = config.n_samples;
    tensor.n_episodes = config.n_episodes;
    tensor.master_seed = config.master_seed;
    tensor.tool_version = kVersion;
    tensor.runtime_seconds.resize(config.architectures.size(), 0.0);
    tensor.scores.resize(config.architectures.size() * config.n_samples *
                         config.n_episodes);

    unsigned n_workers = config.n_workers != 0
                             ? config.n_workers
                             : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<std::size_t>(
        n_workers, config.n_samples));

    for (std::size_t a = 0; a < config.architectures.size(); ++a) {
        const auto start = std::chrono::steady_clock::now();
        const Architecture arch =
            Architecture::bind(config.architectures[a], env_spec);

        std::atomic<std::size_t> next_sample{0};
        std::atomic<bool> failed{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;

        auto worker = [&] {
            try {
                const auto env = make_environment(config.env_name);
                for (;;) {
                    const std::size_t n =
                        next_sample.fetch_add(1, std::memory_order_relaxed);
                    if (n >= config.n_samples ||
                        failed.load(std::memory_order_relaxed))
                        break;
                    Policy policy(
                        arch, sample_weights(arch, derive_seed(config.master_seed,
                                                               kSeedTagWeights, a,
                                                               n, 0)));
                    for (std::size_t e = 0; e < config.n_episodes; ++e)
                        tensor.at(a, n, e) = run_episode(
                            *env, policy,
                            derive_seed(config.master_seed, kSeedTagEpisode, a, n,
                                        e));
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);

        tensor.runtime_seconds[a] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
    }
    return tensor;
}

}  // namespace rwg
