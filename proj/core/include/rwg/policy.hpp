#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwg/env.hpp"

namespace rwg {

/// Environment-independent shape of a policy network: hidden layer widths
/// (empty = linear model) and whether layers carry bias terms.
struct ArchitectureSpec {
    std::vector<int> hidden_layers;
    bool use_bias = false;

    /// Canonical form, e.g. "0", "4", "4x4", "4x4:bias".
    std::string to_string() const;

    /// Parses "0" (linear), "4", "4,4" / "4x4", with an optional ":bias"
    /// suffix. Throws InvalidArchitectureError on anything else.
    static ArchitectureSpec parse(std::string_view text);

    friend bool operator==(const ArchitectureSpec&,
                           const ArchitectureSpec&) = default;
};

/// An ArchitectureSpec bound to an environment: input width is the
/// observation dimension, the output layer matches the action space.
struct Architecture {
    int input_dim = 0;
    std::vector<int> hidden_layers;
    ActionSpace output;
    bool use_bias = false;

    static Architecture bind(const ArchitectureSpec& spec, const EnvSpec& env);

    int output_dim() const { return policy_output_dim(output); }

    /// Layer widths from input to output inclusive.
    std::vector<int> layer_sizes() const;
};

using WeightVector = std::vector<double>;

/// Number of parameters: for each consecutive layer pair, a dense weight
/// block plus one bias per destination unit when biases are enabled.
std::size_t param_count(const Architecture& arch);

/// All parameters drawn i.i.d. from N(0, 1) using the seed alone, in the
/// exact order the forward pass consumes them: per layer the weight block
/// (destination-major), then that layer's biases.
WeightVector sample_weights(const Architecture& arch, std::uint64_t seed);

/// A weight vector bound to an architecture, with scratch buffers so acting
/// never allocates. Not safe to share across threads; each worker owns one.
class Policy {
public:
    Policy(Architecture arch, WeightVector weights);

    const Architecture& architecture() const { return arch_; }
    const WeightVector& weights() const { return weights_; }

    /// Runs the forward pass (tanh on every layer including the output) and
    /// decodes the action: argmax for discrete spaces (lowest index wins
    /// ties), affine map from [-1, 1] into the bounds for continuous ones.
    void act(std::span<const double> obs, Action& out);

private:
    Architecture arch_;
    WeightVector weights_;
    std::vector<double> buf_a_;
    std::vector<double> buf_b_;
};

/// One-shot convenience around Policy::act.
Action forward(const Architecture& arch, const WeightVector& weights,
               std::span<const double> obs);

}  // namespace rwg
