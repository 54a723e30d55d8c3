#pragma once

#include <cstddef>
#include <vector>

#include "qcheque/density_matrix.hpp"
#include "qcheque/matrix.hpp"
#include "qcheque/rng.hpp"

namespace qcheque {

// Dense statevector over n qubits, 1 <= n <= 24.
//
// Basis ordering: qubit 0 is the most significant bit of the basis index.
// For a 3-qubit register |110> means qubit0=1, qubit1=1, qubit2=0 and lives
// at index 6.
class StateVector {
public:
    explicit StateVector(int num_qubits);  // |0...0>

    // Amplitude vector of a power-of-two length, normalized within 1e-6.
    static StateVector from_amplitudes(std::vector<cdouble> amps);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    cdouble amp(std::size_t index) const;
    const std::vector<cdouble>& amplitudes() const { return amps_; }

    void apply_1q(const Mat2& u, int qubit);  // u must be unitary within 1e-10
    void apply_cnot(int control, int target);

    double prob0(int qubit) const;
    int measure(int qubit, Rng& rng);       // collapses
    void project(int qubit, int outcome);   // post-selects and renormalizes

    cdouble inner_product(const StateVector& other) const;  // <this|other>
    double norm() const;
    DensityMatrix2 reduced_density(int qubit) const;

    // Removes a qubit that is in the definite computational state `outcome`
    // (e.g. right after project/measure), shrinking the register by one.
    StateVector with_qubit_removed(int qubit, int outcome) const;

    // a's qubits become [0, a.n), b's become [a.n, a.n + b.n).
    static StateVector kron(const StateVector& a, const StateVector& b);

    // True when the states differ only by a global phase, within tol on the
    // largest amplitude difference after phase alignment.
    bool equal_up_to_phase(const StateVector& other, double tol = 1e-10) const;

private:
    void check_qubit(int qubit) const;
    std::size_t bit_mask(int qubit) const { return std::size_t(1) << (n_ - 1 - qubit); }

    int n_;
    std::vector<cdouble> amps_;
};

} // namespace qcheque
