#pragma once

// Rule systems for concrete encodings: prime ideals, fullness, bisimulation,
// and both directions between clause systems (SGA) and finitary rules.

#include "nid/encodings/bisimulation.hpp"
#include "nid/encodings/fullness.hpp"
#include "nid/encodings/prime_ideals.hpp"
#include "nid/encodings/sga.hpp"
