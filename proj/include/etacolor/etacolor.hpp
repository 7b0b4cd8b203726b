#pragma once

// Umbrella header: random graphs with forbidden masks, cycle/path search,
// fractional-acyclicity colouring (verifier, exact solver, power-graph and
// resampling constructions, partition-graph refuter), closed-form bounds,
// and the sweep/fit experiment harness.

#include "rational.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "random_model.hpp"
#include "density.hpp"
#include "cycles.hpp"
#include "paths.hpp"
#include "colouring.hpp"
#include "power.hpp"
#include "exact.hpp"
#include "lll.hpp"
#include "refute.hpp"
#include "bounds.hpp"
#include "experiments.hpp"
