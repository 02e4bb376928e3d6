#include "rwg/env.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rwg/envs/acrobot.hpp"
#include "rwg/envs/cart_pole.hpp"
#include "rwg/envs/mountain_car.hpp"
#include "rwg/envs/pendulum.hpp"

namespace rwg {
namespace {

struct Registry {
    std::mutex mutex;
    std::map<std::string, EnvFactory> factories;

    Registry() {
        factories["CartPole-v0"] = [] { return std::make_unique<CartPole>(); };
        factories["MountainCar-v0"] = [] { return std::make_unique<MountainCar>(); };
        factories["MountainCarContinuous-v0"] = [] {
            return std::make_unique<MountainCarContinuous>();
        };
        factories["Pendulum-v0"] = [] { return std::make_unique<Pendulum>(); };
        factories["Acrobot-v1"] = [] { return std::make_unique<Acrobot>(); };
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

int policy_output_dim(const ActionSpace& space) {
    if (const auto* d = std::get_if<Discrete>(&space)) return d->n;
    return static_cast<int>(std::get<Continuous>(space).low.size());
}

bool is_discrete(const ActionSpace& space) {
    return std::holds_alternative<Discrete>(space);
}

void EnvBase::reset(std::uint64_t seed, std::vector<double>& obs) {
    SplitMix64 rng(seed);
    reset_state(rng);
    step_count_ = 0;
    done_ = false;
    obs.resize(static_cast<std::size_t>(spec_.obs_dim));
    write_observation(obs);
}

void EnvBase::step(const Action& action, StepResult& result) {
    if (done_) throw StepAfterDoneError("step called on a finished episode");
    bool terminal = false;
    result.reward = advance(action, terminal);
    ++step_count_;
    done_ = terminal || step_count_ >= static_cast<std::size_t>(spec_.max_steps);
    result.done = done_;
    result.observation.resize(static_cast<std::size_t>(spec_.obs_dim));
    write_observation(result.observation);
}

int EnvBase::discrete_action(const Action& action) const {
    const auto* space = std::get_if<Discrete>(&spec_.action_space);
    if (space == nullptr || !action.discrete)
        throw InvalidActionError("discrete action required for " + spec_.name);
    if (action.index < 0 || action.index >= space->n)
        throw InvalidActionError("action index " + std::to_string(action.index) +
                                 " out of range for " + spec_.name);
    return action.index;
}

double EnvBase::continuous_action(const Action& action, std::size_t i) const {
    const auto* space = std::get_if<Continuous>(&spec_.action_space);
    if (space == nullptr || action.discrete)
        throw InvalidActionError("continuous action required for " + spec_.name);
    if (action.values.size() != space->low.size())
        throw InvalidActionError(
            "continuous action has " + std::to_string(action.values.size()) +
            " components, expected " + std::to_string(space->low.size()));
    return std::clamp(action.values[i], space->low[i], space->high[i]);
}

void register_environment(const std::string& name, EnvFactory factory) {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    r.factories[name] = std::move(factory);
}

std::unique_ptr<Environment> make_environment(const std::string& name) {
    EnvFactory factory;
    {
        Registry& r = registry();
        std::lock_guard lock(r.mutex);
        auto it = r.factories.find(name);
        if (it == r.factories.end()) throw UnknownEnvironmentError(name);
        factory = it->second;
    }
    return factory();
}

EnvSpec environment_spec(const std::string& name) {
    return make_environment(name)->spec();
}

std::vector<std::string> registered_environments() {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    std::vector<std::string> names;
    names.reserve(r.factories.size());
    for (const auto& [name, factory] : r.factories) names.push_back(name);
    return names;
}

double episode_score(std::span<const double> rewards) {
    if (rewards.empty()) throw EmptyInputError("episode has no rewards");
    return std::accumulate(rewards.begin(), rewards.end(), 0.0);
}

}  // namespace rwg
