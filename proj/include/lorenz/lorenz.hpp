#pragma once

#include "lorenz/dataio.hpp"
#include "lorenz/fitting.hpp"
#include "lorenz/gof.hpp"
#include "lorenz/metrics.hpp"
#include "lorenz/model.hpp"
#include "lorenz/nelder_mead.hpp"
#include "lorenz/quadrature.hpp"
#include "lorenz/simple_method.hpp"
#include "lorenz/special_functions.hpp"
