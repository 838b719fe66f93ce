#pragma once

#include "holotype/rational.hpp"
#include "holotype/matrix.hpp"
#include "holotype/subspace.hpp"
#include "holotype/random.hpp"
#include "holotype/lie_algebra.hpp"
#include "holotype/acs.hpp"
#include "holotype/symplectic.hpp"
#include "holotype/json_io.hpp"
#include "holotype/suites.hpp"
