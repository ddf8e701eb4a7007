#pragma once

// Umbrella header.

#include "bigint.hpp"
#include "congruence.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "fibgroup.hpp"
#include "geometry.hpp"
#include "goldbach.hpp"
#include "metallic.hpp"
#include "perfect.hpp"
#include "pnum.hpp"
#include "primes.hpp"
#include "qfield.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "solver.hpp"
#include "verify.hpp"
