#pragma once

#include "ymwk/central/imn_closed.hpp"
#include "ymwk/central/params.hpp"
#include "ymwk/central/phase_volume.hpp"
#include "ymwk/central/square.hpp"
