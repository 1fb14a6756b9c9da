#pragma once

#include "bdom/families.hpp"
#include "bdom/frontier.hpp"
#include "bdom/grid.hpp"
#include "bdom/harness.hpp"
#include "bdom/io.hpp"
#include "bdom/lattice.hpp"
#include "bdom/oracle.hpp"
#include "bdom/pattern.hpp"
#include "bdom/solver.hpp"
