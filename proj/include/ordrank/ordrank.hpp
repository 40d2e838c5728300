#pragma once

// Umbrella header for the ordrank library: ordinal regression with a
// multi-output neural network (cumulative targets, independent sigmoid
// outputs, threshold-scan decoding) plus a softmax classification baseline,
// and the seeded benchmark harness around both.

#include "ordrank/benchmark.hpp"
#include "ordrank/core.hpp"
#include "ordrank/dataset.hpp"
#include "ordrank/ensemble.hpp"
#include "ordrank/grid.hpp"
#include "ordrank/metrics.hpp"
#include "ordrank/model_io.hpp"
#include "ordrank/network.hpp"
#include "ordrank/normalize.hpp"
#include "ordrank/parallel.hpp"
#include "ordrank/reference_results.hpp"
#include "ordrank/rng.hpp"
#include "ordrank/split.hpp"
#include "ordrank/train.hpp"
