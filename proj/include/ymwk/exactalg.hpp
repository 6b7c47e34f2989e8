#pragma once

#include "ymwk/exactalg/bernoulli.hpp"
#include "ymwk/exactalg/gauss_rational.hpp"
#include "ymwk/exactalg/multipoly.hpp"
#include "ymwk/exactalg/rational.hpp"
