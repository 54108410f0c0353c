#pragma once

#include "specbid/agents.hpp"
#include "specbid/assignment.hpp"
#include "specbid/auction.hpp"
#include "specbid/channel.hpp"
#include "specbid/config.hpp"
#include "specbid/csv.hpp"
#include "specbid/engine.hpp"
#include "specbid/errors.hpp"
#include "specbid/random.hpp"
#include "specbid/scenario.hpp"
#include "specbid/valuation.hpp"
