#pragma once
// Umbrella header.

#include "vanish/elimination.hpp"
#include "vanish/exact.hpp"
#include "vanish/laurent.hpp"
#include "vanish/linalg.hpp"
#include "vanish/nondegeneracy.hpp"
#include "vanish/nonresonance.hpp"
#include "vanish/poly.hpp"
#include "vanish/polytope.hpp"
#include "vanish/spectrum.hpp"
#include "vanish/theorems.hpp"
#include "vanish/volume.hpp"
