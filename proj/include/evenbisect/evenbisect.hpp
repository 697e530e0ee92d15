#pragma once

#include "evenbisect/bench.hpp"
#include "evenbisect/bisection.hpp"
#include "evenbisect/bounds.hpp"
#include "evenbisect/combine.hpp"
#include "evenbisect/cycles.hpp"
#include "evenbisect/degeneracy.hpp"
#include "evenbisect/embedding.hpp"
#include "evenbisect/errors.hpp"
#include "evenbisect/generators.hpp"
#include "evenbisect/graph.hpp"
#include "evenbisect/graph_io.hpp"
#include "evenbisect/oracle.hpp"
#include "evenbisect/pipeline.hpp"
#include "evenbisect/rng.hpp"
#include "evenbisect/rounding.hpp"
#include "evenbisect/shearer.hpp"
#include "evenbisect/turan.hpp"
