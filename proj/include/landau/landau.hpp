#pragma once

// Umbrella header.

#include "landau/classical.hpp"
#include "landau/fock.hpp"
#include "landau/model.hpp"
#include "landau/quadrature.hpp"
#include "landau/report.hpp"
#include "landau/special_functions.hpp"
#include "landau/wavefunction.hpp"
