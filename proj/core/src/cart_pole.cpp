#include "rwg/envs/cart_pole.hpp"

#include <algorithm>
#include <cmath>

namespace rwg {

namespace {
constexpr double kPoleMassLength = CartPole::kPoleMass * CartPole::kPoleHalfLength;
}

CartPole::CartPole()
    : EnvBase(EnvSpec{"CartPole-v0", 4, Discrete{2}, 200, 195.0}) {}

void CartPole::set_state(std::span<const double> s) {
    std::copy_n(s.begin(), s_.size(), s_.begin());
}

void CartPole::reset_state(SplitMix64& rng) {
    for (double& v : s_) v = rng.next_uniform(-0.05, 0.05);
}

double CartPole::advance(const Action& action, bool& terminal) {
    const double force = discrete_action(action) == 1 ? kForceMag : -kForceMag;
    const auto [x, x_dot, theta, theta_dot] = s_;
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const double temp =
        (force + kPoleMassLength * theta_dot * theta_dot * sin_t) / kTotalMass;
    const double theta_acc =
        (kGravity * sin_t - cos_t * temp) /
        (kPoleHalfLength * (4.0 / 3.0 - kPoleMass * cos_t * cos_t / kTotalMass));
    const double x_acc = temp - kPoleMassLength * theta_acc * cos_t / kTotalMass;

    s_[0] = x + kDt * x_dot;
    s_[1] = x_dot + kDt * x_acc;
    s_[2] = theta + kDt * theta_dot;
    s_[3] = theta_dot + kDt * theta_acc;

    terminal = std::abs(s_[0]) > kXLimit || std::abs(s_[2]) > kThetaLimit;
    return 1.0;
}

void CartPole::write_observation(std::span<double> obs) const {
    std::copy(s_.begin(), s_.end(), obs.begin());
}

}  // namespace rwg
