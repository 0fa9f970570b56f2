#pragma once

#include "orbidim/centralizer.hpp"
#include "orbidim/dimension.hpp"
#include "orbidim/errors.hpp"
#include "orbidim/lawton.hpp"
#include "orbidim/lie.hpp"
#include "orbidim/orbifold.hpp"
#include "orbidim/quadratic.hpp"
#include "orbidim/rational.hpp"
#include "orbidim/reference_tables.hpp"
#include "orbidim/tables.hpp"
#include "orbidim/threeorb.hpp"
