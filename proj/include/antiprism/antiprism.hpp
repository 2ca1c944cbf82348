#pragma once

#include "antiprism/error.hpp"
#include "antiprism/euclidean.hpp"
#include "antiprism/hyperbolic.hpp"
#include "antiprism/minkowski.hpp"
#include "antiprism/quadrature.hpp"
#include "antiprism/types.hpp"
#include "antiprism/volume.hpp"
