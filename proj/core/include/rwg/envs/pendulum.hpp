#pragma once

#include <array>
#include <span>

#include "rwg/env.hpp"

namespace rwg {

/// Torque-controlled pendulum swing-up. Never terminates early; the cost
/// penalizes angle from upright, angular velocity and applied torque, all
/// evaluated on the state the torque acts on.
class Pendulum final : public EnvBase {
public:
    static constexpr double kMaxSpeed = 8.0;
    static constexpr double kMaxTorque = 2.0;
    static constexpr double kDt = 0.05;
    static constexpr double kGravity = 10.0;
    static constexpr double kMass = 1.0;
    static constexpr double kLength = 1.0;

    Pendulum();

    /// State is (theta, theta_dot); the observation is
    /// (cos theta, sin theta, theta_dot).
    void set_state(std::span<const double> s);
    std::span<const double> state() const { return s_; }

    /// Wraps an angle into (-pi, pi].
    static double wrap_angle(double theta);

protected:
    void reset_state(SplitMix64& rng) override;
    double advance(const Action& action, bool& terminal) override;
    void write_observation(std::span<double> obs) const override;

private:
    std::array<double, 2> s_{};
};

}  // namespace rwg
