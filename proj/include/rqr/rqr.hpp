#pragma once

#include "rqr/arith.hpp"
#include "rqr/quartic.hpp"
#include "rqr/two_squares.hpp"
#include "rqr/alpha.hpp"
#include "rqr/pell.hpp"
#include "rqr/oracles.hpp"
#include "rqr/laws.hpp"
#include "rqr/genus.hpp"
#include "rqr/sweep.hpp"
#include "rqr/json_io.hpp"
