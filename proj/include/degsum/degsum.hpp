#ifndef DEGSUM_DEGSUM_HPP
#define DEGSUM_DEGSUM_HPP

#include "degsum/certificates.hpp"
#include "degsum/decompose.hpp"
#include "degsum/errors.hpp"
#include "degsum/feasibility.hpp"
#include "degsum/generators.hpp"
#include "degsum/graph.hpp"
#include "degsum/graph_io.hpp"
#include "degsum/mod3_cycles.hpp"
#include "degsum/oracles.hpp"
#include "degsum/partition.hpp"
#include "degsum/rng.hpp"
#include "degsum/stress.hpp"
#include "degsum/vertex_set.hpp"

#endif  // DEGSUM_DEGSUM_HPP
