#pragma once

#include "trapcorr/analysis.hpp"
#include "trapcorr/circuit.hpp"
#include "trapcorr/erfc.hpp"
#include "trapcorr/error.hpp"
#include "trapcorr/hamiltonian.hpp"
#include "trapcorr/model.hpp"
#include "trapcorr/parallel.hpp"
#include "trapcorr/series.hpp"
