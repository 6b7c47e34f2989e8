#pragma once

#include "ymwk/spectral/airy.hpp"
#include "ymwk/spectral/basis.hpp"
#include "ymwk/spectral/eigen.hpp"
#include "ymwk/spectral/hamiltonian.hpp"
#include "ymwk/spectral/oracles.hpp"
#include "ymwk/spectral/partition.hpp"
