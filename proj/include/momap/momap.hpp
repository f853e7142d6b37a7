#pragma once

#include "momap/core.hpp"
#include "momap/group.hpp"
#include "momap/scalar.hpp"
#include "momap/spectral.hpp"
#include "momap/rational.hpp"
#include "momap/action.hpp"
#include "momap/cone.hpp"
#include "momap/solver.hpp"
#include "momap/stability.hpp"
#include "momap/vortex.hpp"
#include "momap/pairs.hpp"
