#pragma once

#include "hgdual/hypergraph.hpp"
#include "hgdual/crit_state.hpp"
#include "hgdual/sink.hpp"
#include "hgdual/rs.hpp"
#include "hgdual/dfs.hpp"
#include "hgdual/baselines.hpp"
#include "hgdual/generators.hpp"
