#pragma once

#include "ymwk/wk/bloch.hpp"
#include "ymwk/wk/fixtures.hpp"
#include "ymwk/wk/imn.hpp"
#include "ymwk/wk/momentum.hpp"
#include "ymwk/wk/potential.hpp"
#include "ymwk/wk/recursion.hpp"
