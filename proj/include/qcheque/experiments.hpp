#pragma once

#include "qcheque/circuit.hpp"

namespace qcheque {

// Cheque-generation experiment.  A message qubit is teleported into a
// shared GHZ triple with the Pauli corrections folded in as controlled
// gates, and the cheque wire is read out.
//
// Wires: 0 = message, 1 = sender ancilla, 2 = cheque qubit, 3 = bank qubit.
// Because the corrections stay entangled with the measurement wires, the
// cheque wire's marginal is diagonal: ideal P(wire2 = 0) = cos^2(pi/8).
Circuit cheque_generation_circuit();   // unitary part only
Circuit cheque_generation_measured();  // + MEASURE 2 Z

// Cheque-verification experiment: a swap test between two freshly prepared
// |0> qubits.  Wires: 0 = ancilla, 1 and 2 = inputs.
// Ideal P(wire0 = 0) = 1 exactly.
Circuit cheque_verification_circuit();  // includes MEASURE 0 Z

} // namespace qcheque
