#pragma once

#include "rwg/csv.hpp"
#include "rwg/env.hpp"
#include "rwg/envs/acrobot.hpp"
#include "rwg/envs/cart_pole.hpp"
#include "rwg/envs/mountain_car.hpp"
#include "rwg/envs/pendulum.hpp"
#include "rwg/errors.hpp"
#include "rwg/format.hpp"
#include "rwg/harness.hpp"
#include "rwg/policy.hpp"
#include "rwg/rng.hpp"
#include "rwg/score_tensor.hpp"
#include "rwg/stats.hpp"
#include "rwg/svg.hpp"
#include "rwg/tensor_io.hpp"
#include "rwg/version.hpp"
