#pragma once
// Umbrella include for the whole library.

#include "semihilbert/block2.hpp"
#include "semihilbert/catalog.hpp"
#include "semihilbert/ensemble.hpp"
#include "semihilbert/io.hpp"
#include "semihilbert/kernel.hpp"
#include "semihilbert/operator.hpp"
#include "semihilbert/radii.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/search.hpp"
#include "semihilbert/suite.hpp"
#include "semihilbert/types.hpp"
#include "semihilbert/weight.hpp"
