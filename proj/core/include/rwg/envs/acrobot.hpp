#pragma once

#include <array>
#include <span>

#include "rwg/env.hpp"

namespace rwg {

/// Two-link pendulum actuated at the joint between the links. One RK4 step
/// of dt = 0.2 per action; the episode ends when the free tip swings above
/// the bar. Reward -1 per step, 0 on the terminating step.
class Acrobot final : public EnvBase {
public:
    static constexpr double kDt = 0.2;
    static constexpr double kLinkLength1 = 1.0;
    static constexpr double kLinkMass1 = 1.0;
    static constexpr double kLinkMass2 = 1.0;
    static constexpr double kLinkCom1 = 0.5;
    static constexpr double kLinkCom2 = 0.5;
    static constexpr double kLinkInertia = 1.0;
    static constexpr double kGravity = 9.8;
    static constexpr double kMaxVel1 = 4.0 * 3.141592653589793;
    static constexpr double kMaxVel2 = 9.0 * 3.141592653589793;

    Acrobot();

    /// State is (theta1, theta2, theta1_dot, theta2_dot); the observation is
    /// (cos t1, sin t1, cos t2, sin t2, t1_dot, t2_dot).
    void set_state(std::span<const double> s);
    std::span<const double> state() const { return s_; }

    /// Wraps an angle into [-pi, pi).
    static double wrap_angle(double theta);

protected:
    void reset_state(SplitMix64& rng) override;
    double advance(const Action& action, bool& terminal) override;
    void write_observation(std::span<double> obs) const override;

private:
    std::array<double, 4> s_{};
};

}  // namespace rwg
