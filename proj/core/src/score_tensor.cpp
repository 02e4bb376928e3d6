#include "rwg/score_tensor.hpp"

namespace rwg {

void ScoreTensor::validate() const {
    if (architectures.empty())
        throw DimensionMismatchError("tensor has no architectures");
    if (n_samples == 0 || n_episodes == 0)
        throw DimensionMismatchError("tensor has empty sample/episode axes");
    if (runtime_seconds.size() != architectures.size())
        throw DimensionMismatchError("runtime list does not match architectures");
    if (scores.size() != architectures.size() * n_samples * n_episodes)
        throw DimensionMismatchError("score payload does not match dimensions");
}

}  // namespace rwg
