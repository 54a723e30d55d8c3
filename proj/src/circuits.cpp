#include "qcheque/circuits.hpp"

#include <cmath>
#include <stdexcept>

namespace qcheque {

Circuit message_state_prep() {
    Circuit c(1);
    c.add_gate(Gate::H, 0).add_gate(Gate::T, 0).add_gate(Gate::H, 0).add_gate(Gate::S, 0);
    return c;
}

Circuit ghz_prep() {
    Circuit c(3);
    c.add_gate(Gate::H, 0).add_cnot(0, 1).add_cnot(0, 2);
    return c;
}

Circuit reversed_cnot(int control, int target, int num_qubits) {
    Circuit c(num_qubits);
    c.add_gate(Gate::H, control)
        .add_gate(Gate::H, target)
        .add_cnot(target, control)
        .add_gate(Gate::H, control)
        .add_gate(Gate::H, target);
    return c;
}

Circuit swap_circuit(int a, int b, int num_qubits) {
    Circuit c(num_qubits);
    c.add_cnot(a, b).add_cnot(b, a).add_cnot(a, b);
    return c;
}

Circuit toffoli(int c0, int c1, int target, int num_qubits) {
    if (c0 == c1 || c0 == target || c1 == target)
        throw std::invalid_argument("toffoli: wires must be distinct");
    Circuit c(num_qubits);
    c.add_gate(Gate::H, target)
        .add_cnot(c1, target)
        .add_gate(Gate::Tdg, target)
        .add_cnot(c0, target)
        .add_gate(Gate::T, target)
        .add_cnot(c1, target)
        .add_gate(Gate::Tdg, target)
        .add_cnot(c0, target)
        .add_gate(Gate::T, c1)
        .add_gate(Gate::T, target)
        .add_gate(Gate::H, target)
        .add_cnot(c0, c1)
        .add_gate(Gate::T, c0)
        .add_gate(Gate::Tdg, c1)
        .add_cnot(c0, c1);
    return c;
}

Circuit fredkin(int control, int t1, int t2, int num_qubits) {
    if (control == t1 || control == t2 || t1 == t2)
        throw std::invalid_argument("fredkin: wires must be distinct");
    Circuit c(num_qubits);
    c.add_cnot(t2, t1);
    c.append(toffoli(control, t1, t2, num_qubits));
    c.add_cnot(t2, t1);
    return c;
}

Circuit state_prep_circuit(const StateVector& one_qubit_state) {
    if (one_qubit_state.num_qubits() != 1)
        throw std::invalid_argument("state_prep_circuit: need a 1-qubit state");
    const cdouble a0 = one_qubit_state.amp(0);
    const cdouble a1 = one_qubit_state.amp(1);
    const double m0 = std::abs(a0);
    const double m1 = std::abs(a1);
    const double theta = 2.0 * std::atan2(m1, m0);
    // Remove the global phase so that the |0> amplitude is real and
    // non-negative, matching u3's first column.
    double phi = 0.0;
    if (m1 > 1e-15) phi = std::arg(a1) - (m0 > 1e-15 ? std::arg(a0) : 0.0);
    Circuit c(1);
    c.add_rotation(theta, phi, 0.0, 0);
    return c;
}

BellOutcome bell_measure(StateVector& sv, int q_phase, int q_flip, Rng& rng) {
    sv.apply_cnot(q_phase, q_flip);
    sv.apply_1q(gate_matrix(Gate::H), q_phase);
    BellOutcome o;
    o.b_phase = sv.measure(q_phase, rng);
    o.b_flip = sv.measure(q_flip, rng);
    return o;
}

Gate bell_correction(const BellOutcome& o) {
    if (o.b_phase == 0 && o.b_flip == 0) return Gate::I;
    if (o.b_phase == 1 && o.b_flip == 0) return Gate::Z;
    if (o.b_phase == 0 && o.b_flip == 1) return Gate::X;
    return Gate::Y;
}

CMatrix circuit_unitary(const Circuit& c) {
    if (c.num_qubits > 10)
        throw std::invalid_argument("circuit_unitary: more than 10 qubits");
    if (c.has_measurement())
        throw std::invalid_argument("circuit_unitary: circuit contains measurements");
    const std::size_t dim = std::size_t(1) << c.num_qubits;
    CMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cdouble> amps(dim);
        amps[col] = 1.0;
        StateVector sv = StateVector::from_amplitudes(std::move(amps));
        apply_circuit(sv, c);
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = sv.amp(row);
    }
    return u;
}

} // namespace qcheque
