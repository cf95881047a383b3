#pragma once

// Umbrella header for the whole library.

#include "satpow/errors.hpp"
#include "satpow/rational.hpp"
#include "satpow/monomial.hpp"
#include "satpow/order.hpp"
#include "satpow/ring.hpp"
#include "satpow/poly.hpp"
#include "satpow/vecpoly.hpp"
#include "satpow/monomial_oracle.hpp"
#include "satpow/groebner.hpp"
#include "satpow/ideal_ops.hpp"
#include "satpow/module_ops.hpp"
#include "satpow/asymptotics.hpp"
#include "satpow/jobspec.hpp"
#include "satpow/emit.hpp"
#include "satpow/driver.hpp"
