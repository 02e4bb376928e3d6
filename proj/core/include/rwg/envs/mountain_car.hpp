#pragma once

#include <array>
#include <span>

#include "rwg/env.hpp"

namespace rwg {

/// Underpowered car in a valley, discrete push left/coast/right.
/// Reward -1 per step until the goal position is reached.
class MountainCar final : public EnvBase {
public:
    static constexpr double kMinPosition = -1.2;
    static constexpr double kMaxPosition = 0.6;
    static constexpr double kMaxSpeed = 0.07;
    static constexpr double kGoalPosition = 0.5;
    static constexpr double kForce = 0.001;
    static constexpr double kGravity = 0.0025;

    MountainCar();

    /// State is (position, velocity), identical to the observation.
    void set_state(std::span<const double> s);
    std::span<const double> state() const { return s_; }

protected:
    void reset_state(SplitMix64& rng) override;
    double advance(const Action& action, bool& terminal) override;
    void write_observation(std::span<double> obs) const override;

private:
    std::array<double, 2> s_{};
};

/// Continuous-torque variant: force is the clamped scalar action scaled by
/// 0.0015. Each step costs 0.1 * action^2; reaching the goal adds +100.
class MountainCarContinuous final : public EnvBase {
public:
    static constexpr double kMinPosition = -1.2;
    static constexpr double kMaxPosition = 0.6;
    static constexpr double kMaxSpeed = 0.07;
    static constexpr double kGoalPosition = 0.45;
    static constexpr double kPower = 0.0015;
    static constexpr double kGravity = 0.0025;

    MountainCarContinuous();

    void set_state(std::span<const double> s);
    std::span<const double> state() const { return s_; }

protected:
    void reset_state(SplitMix64& rng) override;
    double advance(const Action& action, bool& terminal) override;
    void write_observation(std::span<double> obs) const override;

private:
    std::array<double, 2> s_{};
};

}  // namespace rwg
