#pragma once

#include "ymwk/channels/adiabatic.hpp"
#include "ymwk/channels/free_channel.hpp"
#include "ymwk/channels/hyperbolic.hpp"
#include "ymwk/channels/leading.hpp"
#include "ymwk/channels/zeta_integral.hpp"
