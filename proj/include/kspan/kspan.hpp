#pragma once

#include "kspan/bench.hpp"
#include "kspan/connectivity.hpp"
#include "kspan/dominance.hpp"
#include "kspan/errors.hpp"
#include "kspan/flow.hpp"
#include "kspan/gadgets.hpp"
#include "kspan/generators.hpp"
#include "kspan/graph.hpp"
#include "kspan/io.hpp"
#include "kspan/linkage.hpp"
#include "kspan/minimal.hpp"
#include "kspan/pipeline.hpp"
#include "kspan/rational.hpp"
#include "kspan/rng.hpp"
