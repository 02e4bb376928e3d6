#pragma once

#include <array>
#include <span>

#include "rwg/env.hpp"

namespace rwg {

/// Pole balancing on a cart. Euler integration at dt = 0.02; push left or
/// right with a fixed-magnitude force. Reward +1 every step, including the
/// terminating one.
class CartPole final : public EnvBase {
public:
    static constexpr double kGravity = 9.8;
    static constexpr double kCartMass = 1.0;
    static constexpr double kPoleMass = 0.1;
    static constexpr double kTotalMass = kCartMass + kPoleMass;
    static constexpr double kPoleHalfLength = 0.5;
    static constexpr double kForceMag = 10.0;
    static constexpr double kDt = 0.02;
    static constexpr double kXLimit = 2.4;
    static constexpr double kThetaLimit = 12.0 * 0.017453292519943295;

    CartPole();

    /// State is (x, x_dot, theta, theta_dot).
    void set_state(std::span<const double> s);
    std::span<const double> state() const { return s_; }

protected:
    void reset_state(SplitMix64& rng) override;
    double advance(const Action& action, bool& terminal) override;
    void write_observation(std::span<double> obs) const override;

private:
    std::array<double, 4> s_{};
};

}  // namespace rwg
