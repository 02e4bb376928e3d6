#include "rwg/envs/mountain_car.hpp"

#include <algorithm>
#include <cmath>

namespace rwg {

MountainCar::MountainCar()
    : EnvBase(EnvSpec{"MountainCar-v0", 2, Discrete{3}, 200, -110.0}) {}

void MountainCar::set_state(std::span<const double> s) {
    std::copy_n(s.begin(), s_.size(), s_.begin());
}

void MountainCar::reset_state(SplitMix64& rng) {
    s_[0] = rng.next_uniform(-0.6, -0.4);
    s_[1] = 0.0;
}

double MountainCar::advance(const Action& action, bool& terminal) {
    const double push = (discrete_action(action) - 1) * kForce;
    auto [pos, vel] = s_;
    vel += push - kGravity * std::cos(3.0 * pos);
    vel = std::clamp(vel, -kMaxSpeed, kMaxSpeed);
    pos += vel;
    pos = std::clamp(pos, kMinPosition, kMaxPosition);
    if (pos == kMinPosition && vel < 0.0) vel = 0.0;
    s_ = {pos, vel};
    terminal = pos >= kGoalPosition;
    return -1.0;
}

void MountainCar::write_observation(std::span<double> obs) const {
    std::copy(s_.begin(), s_.end(), obs.begin());
}

MountainCarContinuous::MountainCarContinuous()
    : EnvBase(EnvSpec{"MountainCarContinuous-v0", 2, Continuous{{-1.0}, {1.0}},
                      999, 90.0}) {}

void MountainCarContinuous::set_state(std::span<const double> s) {
    std::copy_n(s.begin(), s_.size(), s_.begin());
}

void MountainCarContinuous::reset_state(SplitMix64& rng) {
    s_[0] = rng.next_uniform(-0.6, -0.4);
    s_[1] = 0.0;
}

double MountainCarContinuous::advance(const Action& action, bool& terminal) {
    const double a = continuous_action(action, 0);
    auto [pos, vel] = s_;
    vel += a * kPower - kGravity * std::cos(3.0 * pos);
    vel = std::clamp(vel, -kMaxSpeed, kMaxSpeed);
    pos += vel;
    pos = std::clamp(pos, kMinPosition, kMaxPosition);
    if (pos == kMinPosition && vel < 0.0) vel = 0.0;
    s_ = {pos, vel};
    terminal = pos >= kGoalPosition;
    return -0.1 * a * a + (terminal ? 100.0 : 0.0);
}

void MountainCarContinuous::write_observation(std::span<double> obs) const {
    std::copy(s_.begin(), s_.end(), obs.begin());
}

}  // namespace rwg
