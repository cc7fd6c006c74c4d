#pragma once

// Umbrella header for the whole library.

#include "rre/datasets.hpp"
#include "rre/errors.hpp"
#include "rre/eval.hpp"
#include "rre/fisher.hpp"
#include "rre/grid.hpp"
#include "rre/model.hpp"
#include "rre/perceptron.hpp"
#include "rre/snapshot.hpp"
#include "rre/svm.hpp"
#include "rre/training.hpp"
#include "rre/variance.hpp"
#include "rre/xor_net.hpp"
