#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rwg/errors.hpp"
#include "rwg/rng.hpp"

namespace rwg {

/// Discrete action space with indices 0..n-1.
struct Discrete {
    int n = 0;
};

/// Continuous action space with per-dimension bounds (low < high).
struct Continuous {
    std::vector<double> low;
    std::vector<double> high;
};

using ActionSpace = std::variant<Discrete, Continuous>;

/// Number of outputs a policy network needs for this action space.
int policy_output_dim(const ActionSpace& space);

bool is_discrete(const ActionSpace& space);

/// Either a discrete action index or a continuous action vector. The vector
/// storage is reusable so the episode loop does not allocate per step.
struct Action {
    bool discrete = true;
    int index = 0;
    std::vector<double> values;

    static Action make_discrete(int index) { return Action{true, index, {}}; }
    static Action make_continuous(std::vector<double> v) {
        return Action{false, 0, std::move(v)};
    }
};

struct EnvSpec {
    std::string name;
    int obs_dim = 0;
    ActionSpace action_space;
    int max_steps = 0;
    double solved_score = 0.0;
};

struct StepResult {
    std::vector<double> observation;
    double reward = 0.0;
    bool done = false;
};

/// Uniform reset/step contract. Instances are exclusively owned by one
/// episode at a time and are cheap to create; there is no shared mutable
/// state between instances.
class Environment {
public:
    virtual ~Environment() = default;

    virtual const EnvSpec& spec() const = 0;

    /// Draws a fresh initial state from the seed (and nothing else) and
    /// writes the initial observation. Resets step count and done flag.
    virtual void reset(std::uint64_t seed, std::vector<double>& obs) = 0;

    /// Advances the dynamics one step. Throws StepAfterDoneError once done.
    virtual void step(const Action& action, StepResult& result) = 0;

    virtual std::size_t step_count() const = 0;
    virtual bool done() const = 0;

    std::vector<double> reset(std::uint64_t seed) {
        std::vector<double> obs;
        reset(seed, obs);
        return obs;
    }

    StepResult step(const Action& action) {
        StepResult result;
        step(action, result);
        return result;
    }
};

/// Helper base handling step counting, the step limit, done bookkeeping and
/// action validation. Derived classes implement the dynamics only.
class EnvBase : public Environment {
public:
    using Environment::reset;
    using Environment::step;

    const EnvSpec& spec() const final { return spec_; }
    void reset(std::uint64_t seed, std::vector<double>& obs) final;
    void step(const Action& action, StepResult& result) final;
    std::size_t step_count() const final { return step_count_; }
    bool done() const final { return done_; }

protected:
    explicit EnvBase(EnvSpec spec) : spec_(std::move(spec)) {}

    virtual void reset_state(SplitMix64& rng) = 0;

    /// Advances the physical state, returns the step reward and sets
    /// `terminal` when the environment's own termination predicate fires
    /// (the step limit is handled by the base).
    virtual double advance(const Action& action, bool& terminal) = 0;

    virtual void write_observation(std::span<double> obs) const = 0;

    /// Validates a discrete action against the space; throws on mismatch.
    int discrete_action(const Action& action) const;

    /// Returns component i of a continuous action, clamped into bounds.
    double continuous_action(const Action& action, std::size_t i) const;

private:
    EnvSpec spec_;
    std::size_t step_count_ = 0;
    bool done_ = false;
};

using EnvFactory = std::function<std::unique_ptr<Environment>()>;

/// Registers an environment under a new name. Re-registering an existing
/// name replaces the factory.
void register_environment(const std::string& name, EnvFactory factory);

/// Instantiates a registered environment; throws UnknownEnvironmentError.
std::unique_ptr<Environment> make_environment(const std::string& name);

/// Returns the spec of a registered environment.
EnvSpec environment_spec(const std::string& name);

/// Names of all registered environments, sorted.
std::vector<std::string> registered_environments();

/// Total undiscounted episode score: the plain sum of the rewards.
double episode_score(std::span<const double> rewards);

}  // namespace rwg
