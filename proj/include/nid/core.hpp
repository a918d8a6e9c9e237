#pragma once

// Finite non-deterministic inductive definitions: rule systems, closed sets,
// generating and full families, deterministic least fixed points.

#include "nid/bit_vector.hpp"
#include "nid/closure.hpp"
#include "nid/error.hpp"
#include "nid/rule_system.hpp"
#include "nid/subset.hpp"
