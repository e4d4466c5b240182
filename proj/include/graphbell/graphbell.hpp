#pragma once

#include "graphbell/clifford.hpp"
#include "graphbell/correlation.hpp"
#include "graphbell/dense.hpp"
#include "graphbell/errors.hpp"
#include "graphbell/expr.hpp"
#include "graphbell/graph.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/pauli.hpp"
#include "graphbell/polynomial.hpp"
#include "graphbell/root_two.hpp"
#include "graphbell/scenario.hpp"
#include "graphbell/stabilizer.hpp"
