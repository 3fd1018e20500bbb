#pragma once

#include "dicke3/adiabatic_fast.hpp"
#include "dicke3/adiabatic_slow.hpp"
#include "dicke3/csv.hpp"
#include "dicke3/density.hpp"
#include "dicke3/diagnostics.hpp"
#include "dicke3/eigensolver.hpp"
#include "dicke3/errors.hpp"
#include "dicke3/hamiltonian.hpp"
#include "dicke3/hilbert.hpp"
#include "dicke3/laguerre.hpp"
#include "dicke3/operators.hpp"
#include "dicke3/params.hpp"
#include "dicke3/phase_space.hpp"
#include "dicke3/spectra.hpp"
