#pragma once

#include <cstdint>

#include "qcheque/circuit.hpp"
#include "qcheque/density_matrix.hpp"
#include "qcheque/noise.hpp"

namespace qcheque {

struct PauliExpectations {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// <X>, <Y>, <Z> of one qubit of the prepared state, from the statevector.
PauliExpectations exact_expectations(const Circuit& prep, int qubit);

// The same estimated by measuring shots_per_basis shots in each of the X, Y
// and Z bases (sub-streams 0, 1, 2 of `seed`).
PauliExpectations estimate_expectations(const Circuit& prep, int qubit,
                                        uint64_t shots_per_basis, uint64_t seed,
                                        const NoiseParams* noise = nullptr);

// rho = (I + x X + y Y + z Z) / 2.  Sampling noise can make the result
// slightly non-physical (a negative eigenvalue); it is returned as-is, so
// check is_physical() where it matters.
DensityMatrix2 reconstruct(const PauliExpectations& e);

// Exact reduced density matrix of one qubit of the prepared state.
DensityMatrix2 exact_density(const Circuit& prep, int qubit);

} // namespace qcheque
