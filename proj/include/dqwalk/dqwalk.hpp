#pragma once

#include "dqwalk/analysis.hpp"
#include "dqwalk/coin.hpp"
#include "dqwalk/csv.hpp"
#include "dqwalk/engine.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/reduce.hpp"
#include "dqwalk/state.hpp"
#include "dqwalk/verify.hpp"
