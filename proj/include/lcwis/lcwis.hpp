#pragma once

#include "lcwis/error.hpp"
#include "lcwis/sequence.hpp"
#include "lcwis/solvers.hpp"
#include "lcwis/gadgets.hpp"
#include "lcwis/reductions.hpp"
#include "lcwis/io.hpp"
#include "lcwis/random.hpp"
#include "lcwis/verify.hpp"
#include "lcwis/bench.hpp"
