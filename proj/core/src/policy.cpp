#include "rwg/policy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "rwg/rng.hpp"

namespace rwg {

namespace {

int parse_layer_width(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
        throw InvalidArchitectureError("bad layer width '" + std::string(token) +
                                       "'");
    return value;
}

}  // namespace

std::string ArchitectureSpec::to_string() const {
    std::string out;
    if (hidden_layers.empty()) {
        out = "0";
    } else {
        for (std::size_t i = 0; i < hidden_layers.size(); ++i) {
            if (i > 0) out += 'x';
            out += std::to_string(hidden_layers[i]);
        }
    }
    if (use_bias) out += ":bias";
    return out;
}

ArchitectureSpec ArchitectureSpec::parse(std::string_view text) {
    ArchitectureSpec spec;
    std::string_view body = text;
    if (const auto colon = body.find(':'); colon != std::string_view::npos) {
        const std::string_view suffix = body.substr(colon + 1);
        if (suffix != "bias")
            throw InvalidArchitectureError("bad architecture suffix '" +
                                           std::string(suffix) + "'");
        spec.use_bias = true;
        body = body.substr(0, colon);
    }
    if (body.empty())
        throw InvalidArchitectureError("empty architecture descriptor");
    if (body == "0") return spec;

    std::size_t start = 0;
    while (true) {
        const std::size_t sep = body.find_first_of(",x", start);
        const std::string_view token =
            body.substr(start, sep == std::string_view::npos ? sep : sep - start);
        spec.hidden_layers.push_back(parse_layer_width(token));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return spec;
}

Architecture Architecture::bind(const ArchitectureSpec& spec,
                                const EnvSpec& env) {
    if (env.obs_dim <= 0 || policy_output_dim(env.action_space) <= 0)
        throw InvalidArchitectureError("environment " + env.name +
                                       " has degenerate dimensions");
    Architecture arch;
    arch.input_dim = env.obs_dim;
    arch.hidden_layers = spec.hidden_layers;
    arch.output = env.action_space;
    arch.use_bias = spec.use_bias;
    return arch;
}

std::vector<int> Architecture::layer_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(hidden_layers.size() + 2);
    sizes.push_back(input_dim);
    sizes.insert(sizes.end(), hidden_layers.begin(), hidden_layers.end());
    sizes.push_back(output_dim());
    return sizes;
}

std::size_t param_count(const Architecture& arch) {
    const std::vector<int> sizes = arch.layer_sizes();
    std::size_t count = 0;
    for (std::size_t l = 1; l < sizes.size(); ++l) {
        const auto n_in = static_cast<std::size_t>(sizes[l - 1]);
        const auto n_out = static_cast<std::size_t>(sizes[l]);
        count += (n_in + (arch.use_bias ? 1 : 0)) * n_out;
    }
    return count;
}

WeightVector sample_weights(const Architecture& arch, std::uint64_t seed) {
    SplitMix64 rng(seed);
    WeightVector weights(param_count(arch));
    for (double& w : weights) w = rng.next_gaussian();
    return weights;
}

Policy::Policy(Architecture arch, WeightVector weights)
    : arch_(std::move(arch)), weights_(std::move(weights)) {
    if (weights_.size() != param_count(arch_))
        throw DimensionMismatchError(
            "weight vector has " + std::to_string(weights_.size()) +
            " entries, architecture needs " +
            std::to_string(param_count(arch_)));
    for (const double w : weights_)
        if (!std::isfinite(w)) throw NumericalError("non-finite weight");
    const std::vector<int> sizes = arch_.layer_sizes();
    const int widest = *std::max_element(sizes.begin() + 1, sizes.end());
    buf_a_.resize(static_cast<std::size_t>(widest));
    buf_b_.resize(static_cast<std::size_t>(widest));
}

void Policy::act(std::span<const double> obs, Action& out) {
    if (obs.size() != static_cast<std::size_t>(arch_.input_dim))
        throw DimensionMismatchError(
            "observation has " + std::to_string(obs.size()) +
            " entries, policy expects " + std::to_string(arch_.input_dim));

    const std::vector<int> sizes = arch_.layer_sizes();
    const double* src = obs.data();
    std::size_t n_in = obs.size();
    double* dst = buf_a_.data();
    std::size_t offset = 0;
    for (std::size_t l = 1; l < sizes.size(); ++l) {
        const auto n_out = static_cast<std::size_t>(sizes[l]);
        const double* block = weights_.data() + offset;
        offset += n_in * n_out;
        const double* bias = arch_.use_bias ? weights_.data() + offset : nullptr;
        if (bias != nullptr) offset += n_out;
        for (std::size_t j = 0; j < n_out; ++j) {
            const double* row = block + j * n_in;
            double sum = bias != nullptr ? bias[j] : 0.0;
            for (std::size_t i = 0; i < n_in; ++i) sum += row[i] * src[i];
            dst[j] = std::tanh(sum);
        }
        src = dst;
        n_in = n_out;
        dst = dst == buf_a_.data() ? buf_b_.data() : buf_a_.data();
    }

    if (const auto* discrete = std::get_if<Discrete>(&arch_.output)) {
        out.discrete = true;
        out.index = static_cast<int>(
            std::max_element(src, src + discrete->n) - src);
    } else {
        const auto& bounds = std::get<Continuous>(arch_.output);
        out.discrete = false;
        out.values.resize(bounds.low.size());
        for (std::size_t i = 0; i < bounds.low.size(); ++i)
            out.values[i] = bounds.low[i] +
                            (src[i] + 1.0) / 2.0 * (bounds.high[i] - bounds.low[i]);
    }
}

Action forward(const Architecture& arch, const WeightVector& weights,
               std::span<const double> obs) {
    Policy policy(arch, weights);
    Action action;
    policy.act(obs, action);
    return action;
}

}  // namespace rwg
