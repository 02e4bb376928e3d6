#include "rwg/envs/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rwg {

namespace {
constexpr double kPi = std::numbers::pi;
}

Pendulum::Pendulum()
    : EnvBase(EnvSpec{"Pendulum-v0", 3, Continuous{{-kMaxTorque}, {kMaxTorque}},
                      200, -140.0}) {}

void Pendulum::set_state(std::span<const double> s) {
    std::copy_n(s.begin(), s_.size(), s_.begin());
}

double Pendulum::wrap_angle(double theta) {
    return theta - 2.0 * kPi * std::ceil((theta - kPi) / (2.0 * kPi));
}

void Pendulum::reset_state(SplitMix64& rng) {
    s_[0] = rng.next_uniform(-kPi, kPi);
    s_[1] = rng.next_uniform(-1.0, 1.0);
}

double Pendulum::advance(const Action& action, bool& terminal) {
    const double u = continuous_action(action, 0);
    auto [theta, theta_dot] = s_;

    const double w = wrap_angle(theta);
    const double cost = w * w + 0.1 * theta_dot * theta_dot + 0.001 * u * u;

    theta_dot += (3.0 * kGravity / (2.0 * kLength) * std::sin(theta) +
                  3.0 / (kMass * kLength * kLength) * u) *
                 kDt;
    theta_dot = std::clamp(theta_dot, -kMaxSpeed, kMaxSpeed);
    theta += theta_dot * kDt;

    s_ = {theta, theta_dot};
    terminal = false;
    return -cost;
}

void Pendulum::write_observation(std::span<double> obs) const {
    obs[0] = std::cos(s_[0]);
    obs[1] = std::sin(s_[0]);
    obs[2] = s_[1];
}

}  // namespace rwg
