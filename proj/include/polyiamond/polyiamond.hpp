#pragma once

#include "polyiamond/animal.hpp"
#include "polyiamond/bigint.hpp"
#include "polyiamond/bounds.hpp"
#include "polyiamond/counts_io.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/errors.hpp"
#include "polyiamond/geometry.hpp"
#include "polyiamond/lattice.hpp"
#include "polyiamond/recurrence.hpp"
#include "polyiamond/redelmeier.hpp"
#include "polyiamond/suite.hpp"
#include "polyiamond/verify.hpp"
