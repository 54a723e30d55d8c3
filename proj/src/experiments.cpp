#include "qcheque/experiments.hpp"

#include "qcheque/circuits.hpp"

namespace qcheque {

Circuit cheque_generation_circuit() {
    Circuit c(4);
    // GHZ triple across sender ancilla, cheque qubit and bank qubit.
    c.append(ghz_prep().embedded(4, {1, 2, 3}));
    // Message state on wire 0.
    c.append(message_state_prep().embedded(4, {0}));
    // Entangling half of a Bell measurement of (message, sender ancilla).
    c.add_cnot(0, 1);
    c.add_gate(Gate::H, 0);
    // Deferred Pauli corrections onto the cheque qubit: bit flip controlled
    // by the ancilla, phase flip controlled by the message wire (CZ built
    // from H CNOT H).
    c.add_cnot(1, 2);
    c.add_gate(Gate::H, 2);
    c.add_cnot(0, 2);
    c.add_gate(Gate::H, 2);
    return c;
}

Circuit cheque_generation_measured() {
    Circuit c = cheque_generation_circuit();
    c.add_measure(2, Basis::Z);
    return c;
}

Circuit cheque_verification_circuit() {
    Circuit c(3);
    c.add_gate(Gate::H, 0);
    c.append(fredkin(0, 1, 2, 3));
    c.add_gate(Gate::H, 0);
    c.add_measure(0, Basis::Z);
    return c;
}

} // namespace qcheque
