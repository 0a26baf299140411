#pragma once

#include "cft/analytic.hpp"
#include "cft/bench.hpp"
#include "cft/conventions.hpp"
#include "cft/csv.hpp"
#include "cft/dft.hpp"
#include "cft/error.hpp"
#include "cft/grid.hpp"
#include "cft/riemann.hpp"
