#pragma once

#include "qcheque/circuit.hpp"

namespace qcheque {

// |0> -> e^{i pi/8} (cos(pi/8)|0> + sin(pi/8)|1>) via H, T, H, S.
Circuit message_state_prep();

// Three-qubit GHZ preparation: H 0, CNOT 0->1, CNOT 0->2.
Circuit ghz_prep();

// CNOT with the roles of the two wires exchanged by conjugating with
// Hadamards: H c, H t, CNOT t->c, H c, H t  ==  CNOT c->t.
Circuit reversed_cnot(int control, int target, int num_qubits);

// SWAP from three alternating CNOTs.
Circuit swap_circuit(int a, int b, int num_qubits);

// Toffoli (CCX) via the standard T / T-dagger network (15 ops).
Circuit toffoli(int c0, int c1, int target, int num_qubits);

// Controlled swap: CNOT t2->t1, Toffoli(c, t1 -> t2), CNOT t2->t1.
Circuit fredkin(int control, int t1, int t2, int num_qubits);

// One U3 preparing |0> into the given single-qubit state (global phase
// dropped).  The input must be a 1-qubit register.
Circuit state_prep_circuit(const StateVector& one_qubit_state);

// Bell measurement of (q_phase, q_flip): CNOT q_phase->q_flip, H q_phase,
// then computational measurement of both wires.  b_phase separates the
// +/- pairs, b_flip the matched/anti-matched pairs.
struct BellOutcome {
    int b_phase = 0;
    int b_flip = 0;
};

BellOutcome bell_measure(StateVector& sv, int q_phase, int q_flip, Rng& rng);

// Pauli correction restoring the teleported branch to reference form:
// (0,0)->I, (1,0)->Z, (0,1)->X, (1,1)->Y.
Gate bell_correction(const BellOutcome& o);

// Full unitary of a measurement-free circuit (num_qubits <= 10).
CMatrix circuit_unitary(const Circuit& c);

} // namespace qcheque
