#include <benchmark/benchmark.h>

#include "rwg/rwg.hpp"

namespace {

void BM_EnvStep(benchmark::State& state, const char* name) {
    const auto env = rwg::make_environment(name);
    const rwg::Architecture arch = rwg::Architecture::bind(
        rwg::ArchitectureSpec::parse("4"), env->spec());
    rwg::Policy policy(arch, rwg::sample_weights(arch, 1));
    std::vector<double> obs;
    rwg::Action action;
    rwg::StepResult result;
    std::uint64_t episode = 0;
    env->reset(episode++, obs);
    for (auto _ : state) {
        policy.act(obs, action);
        env->step(action, result);
        std::swap(obs, result.observation);
        if (env->done()) env->reset(episode++, obs);
        benchmark::DoNotOptimize(obs.data());
    }
}

void BM_PolicyForward(benchmark::State& state) {
    const rwg::EnvSpec spec = rwg::environment_spec("CartPole-v0");
    const rwg::Architecture arch = rwg::Architecture::bind(
        rwg::ArchitectureSpec::parse("4x4"), spec);
    rwg::Policy policy(arch, rwg::sample_weights(arch, 7));
    const std::vector<double> obs(4, 0.01);
    rwg::Action action;
    for (auto _ : state) {
        policy.act(obs, action);
        benchmark::DoNotOptimize(action.index);
    }
}

void BM_SampleWeights(benchmark::State& state) {
    const rwg::EnvSpec spec = rwg::environment_spec("CartPole-v0");
    const rwg::Architecture arch = rwg::Architecture::bind(
        rwg::ArchitectureSpec::parse("4x4"), spec);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        rwg::WeightVector w = rwg::sample_weights(arch, seed++);
        benchmark::DoNotOptimize(w.data());
    }
}

void BM_Evaluate(benchmark::State& state) {
    rwg::RunConfig config;
    config.env_name = "CartPole-v0";
    config.architectures = {rwg::ArchitectureSpec::parse("0")};
    config.n_samples = static_cast<std::size_t>(state.range(0));
    config.n_episodes = 4;
    config.n_workers = 1;
    for (auto _ : state) {
        rwg::ScoreTensor tensor = rwg::evaluate(config);
        benchmark::DoNotOptimize(tensor.scores.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(config.n_samples * 4));
}

BENCHMARK_CAPTURE(BM_EnvStep, cart_pole, "CartPole-v0");
BENCHMARK_CAPTURE(BM_EnvStep, mountain_car, "MountainCar-v0");
BENCHMARK_CAPTURE(BM_EnvStep, pendulum, "Pendulum-v0");
BENCHMARK_CAPTURE(BM_EnvStep, acrobot, "Acrobot-v1");
BENCHMARK(BM_PolicyForward);
BENCHMARK(BM_SampleWeights);
BENCHMARK(BM_Evaluate)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
