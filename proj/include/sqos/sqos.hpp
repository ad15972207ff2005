// Umbrella header.

#pragma once

#include "sqos/bath.hpp"
#include "sqos/errors.hpp"
#include "sqos/gaussian.hpp"
#include "sqos/lagrangian.hpp"
#include "sqos/math.hpp"
#include "sqos/mode.hpp"
#include "sqos/models.hpp"
#include "sqos/ode.hpp"
#include "sqos/propagator.hpp"
#include "sqos/quadrature.hpp"
#include "sqos/run.hpp"
#include "sqos/version.hpp"
