#pragma once

#include "bifurc/activations.hpp"
#include "bifurc/csv.hpp"
#include "bifurc/dynamics.hpp"
#include "bifurc/error.hpp"
#include "bifurc/fixed_point.hpp"
#include "bifurc/graphs.hpp"
#include "bifurc/linalg.hpp"
#include "bifurc/multidim.hpp"
#include "bifurc/ntk.hpp"
#include "bifurc/parallel.hpp"
#include "bifurc/polynomial_filter.hpp"
#include "bifurc/random.hpp"
