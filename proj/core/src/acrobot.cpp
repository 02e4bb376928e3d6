#include "rwg/envs/acrobot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rwg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTorque[] = {-1.0, 0.0, 1.0};

using State = std::array<double, 4>;

State derivatives(const State& s, double u) {
    constexpr double m1 = Acrobot::kLinkMass1;
    constexpr double m2 = Acrobot::kLinkMass2;
    constexpr double l1 = Acrobot::kLinkLength1;
    constexpr double lc1 = Acrobot::kLinkCom1;
    constexpr double lc2 = Acrobot::kLinkCom2;
    constexpr double i1 = Acrobot::kLinkInertia;
    constexpr double i2 = Acrobot::kLinkInertia;
    constexpr double g = Acrobot::kGravity;
    const auto [t1, t2, w1, w2] = s;

    const double d1 =
        m1 * lc1 * lc1 +
        m2 * (l1 * l1 + lc2 * lc2 + 2.0 * l1 * lc2 * std::cos(t2)) + i1 + i2;
    const double d2 = m2 * (lc2 * lc2 + l1 * lc2 * std::cos(t2)) + i2;
    const double phi2 = m2 * lc2 * g * std::cos(t1 + t2 - kPi / 2.0);
    const double phi1 = -m2 * l1 * lc2 * w2 * w2 * std::sin(t2) -
                        2.0 * m2 * l1 * lc2 * w1 * w2 * std::sin(t2) +
                        (m1 * lc1 + m2 * l1) * g * std::cos(t1 - kPi / 2.0) +
                        phi2;
    const double a2 =
        (u + (d2 / d1) * phi1 - m2 * l1 * lc2 * w1 * w1 * std::sin(t2) - phi2) /
        (m2 * lc2 * lc2 + i2 - d2 * d2 / d1);
    const double a1 = -(d2 * a2 + phi1) / d1;
    return {w1, w2, a1, a2};
}

State rk4_step(const State& s, double u, double dt) {
    State k1 = derivatives(s, u);
    State mid;
    for (int i = 0; i < 4; ++i) mid[i] = s[i] + 0.5 * dt * k1[i];
    State k2 = derivatives(mid, u);
    for (int i = 0; i < 4; ++i) mid[i] = s[i] + 0.5 * dt * k2[i];
    State k3 = derivatives(mid, u);
    for (int i = 0; i < 4; ++i) mid[i] = s[i] + dt * k3[i];
    State k4 = derivatives(mid, u);
    State out;
    for (int i = 0; i < 4; ++i)
        out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

}  // namespace

Acrobot::Acrobot()
    : EnvBase(EnvSpec{"Acrobot-v1", 6, Discrete{3}, 500, -60.0}) {}

void Acrobot::set_state(std::span<const double> s) {
    std::copy_n(s.begin(), s_.size(), s_.begin());
}

double Acrobot::wrap_angle(double theta) {
    return theta - 2.0 * kPi * std::floor((theta + kPi) / (2.0 * kPi));
}

void Acrobot::reset_state(SplitMix64& rng) {
    for (double& v : s_) v = rng.next_uniform(-0.1, 0.1);
}

double Acrobot::advance(const Action& action, bool& terminal) {
    const double u = kTorque[discrete_action(action)];
    State s = rk4_step(s_, u, kDt);
    s_[0] = wrap_angle(s[0]);
    s_[1] = wrap_angle(s[1]);
    s_[2] = std::clamp(s[2], -kMaxVel1, kMaxVel1);
    s_[3] = std::clamp(s[3], -kMaxVel2, kMaxVel2);
    terminal = -std::cos(s_[0]) - std::cos(s_[0] + s_[1]) > 1.0;
    return terminal ? 0.0 : -1.0;
}

void Acrobot::write_observation(std::span<double> obs) const {
    obs[0] = std::cos(s_[0]);
    obs[1] = std::sin(s_[0]);
    obs[2] = std::cos(s_[1]);
    obs[3] = std::sin(s_[1]);
    obs[4] = s_[2];
    obs[5] = s_[3];
}

}  // namespace rwg
