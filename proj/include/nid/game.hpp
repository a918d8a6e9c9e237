#pragma once

// Game formulas and theories: parsing, evaluation, compilation to rule
// systems, first-order grounding over finite models, and linear orders.

#include "nid/game/compile.hpp"
#include "nid/game/first_order.hpp"
#include "nid/game/formula.hpp"
#include "nid/game/linear_orders.hpp"
#include "nid/game/parser.hpp"
