#pragma once

#include "trajkit/csv.hpp"
#include "trajkit/ddsim.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/example1.hpp"
#include "trajkit/lift.hpp"
#include "trajkit/oracle.hpp"
#include "trajkit/rng.hpp"
#include "trajkit/signal.hpp"
#include "trajkit/trajspace.hpp"
#include "trajkit/weave.hpp"
