#pragma once

// Umbrella header: the whole library, the JSON views and the claim registry.

#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/random.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/coloring.hpp"
#include "rigidlab/generators.hpp"
#include "rigidlab/io.hpp"
#include "rigidlab/chains.hpp"
#include "rigidlab/rigidity.hpp"
#include "rigidlab/sr_bridge.hpp"
#include "rigidlab/report.hpp"
#include "rigidlab/harness.hpp"
#include "rigidlab/claims.hpp"
