#ifndef PARTITIONS_PARTITIONS_HPP
#define PARTITIONS_PARTITIONS_HPP

// Restricted-partition counting and saddle-point asymptotics:
//   exact oracles, L-function data for the standard part-set families,
//   the closed-form asymptotic constants, and the direct numerical
//   saddle-point machinery that cross-checks them.

#include "partitions/asymptotics.hpp"
#include "partitions/bernoulli.hpp"
#include "partitions/errors.hpp"
#include "partitions/exact.hpp"
#include "partitions/fit.hpp"
#include "partitions/models.hpp"
#include "partitions/real.hpp"
#include "partitions/roots.hpp"
#include "partitions/saddle.hpp"
#include "partitions/special_functions.hpp"

#endif
