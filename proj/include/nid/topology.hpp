#pragma once

// Set-presented formal spaces: points, flatness, cover saturation, and
// morphisms.

#include "nid/topology/formal_space.hpp"
#include "nid/topology/morphisms.hpp"
#include "nid/topology/points.hpp"
