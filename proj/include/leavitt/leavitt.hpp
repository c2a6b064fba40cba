#pragma once

#include "leavitt/algebra.hpp"
#include "leavitt/boundary.hpp"
#include "leavitt/cardinal.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_io.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/matrix.hpp"
#include "leavitt/naimark.hpp"
#include "leavitt/rational.hpp"
#include "leavitt/repn.hpp"
#include "leavitt/vertex_set.hpp"
