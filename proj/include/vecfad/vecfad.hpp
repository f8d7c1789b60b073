#pragma once

// Umbrella header. The quadrature oracle is not included; it needs
// libquadmath and is meant for validation code only.

#include "vecfad/bench.hpp"
#include "vecfad/cubic_spline.hpp"
#include "vecfad/error_map.hpp"
#include "vecfad/errors.hpp"
#include "vecfad/evaluator.hpp"
#include "vecfad/hermite.hpp"
#include "vecfad/interp_grid.hpp"
#include "vecfad/line_list.hpp"
#include "vecfad/rational_baselines.hpp"
#include "vecfad/reference_engine.hpp"
