#pragma once

/// Two-qubit entanglement from moments of the partially transposed density
/// matrix: the universal witness W = det(rho^Gamma), the moment-based
/// negativity quartic, Makhlin-invariant reconstruction of the moments,
/// X-state closed forms, and Monte-Carlo noise studies.

#include "ptmom/ensemble.hpp"
#include "ptmom/errors.hpp"
#include "ptmom/invariants.hpp"
#include "ptmom/matrix.hpp"
#include "ptmom/measures.hpp"
#include "ptmom/qmat.hpp"
#include "ptmom/xstates.hpp"
