#pragma once

#include <string>
#include <vector>

#include "qcheque/gates.hpp"
#include "qcheque/statevector.hpp"

namespace qcheque {

// One circuit operation.  Fixed gates cover the protocol circuits; Rotation
// (a u3) covers state preparations with arbitrary Bloch angles.
struct GateOp {
    enum class Kind { Fixed, Rotation, Cnot, Measure };

    Kind kind = Kind::Fixed;
    Gate gate = Gate::I;                    // Fixed
    double theta = 0, phi = 0, lambda = 0;  // Rotation
    int q0 = 0;                             // target (Fixed/Rotation/Measure) or control (Cnot)
    int q1 = 0;                             // target (Cnot)
    Basis basis = Basis::Z;                 // Measure

    static GateOp fixed(Gate g, int qubit);
    static GateOp rotation(double theta, double phi, double lambda, int qubit);
    static GateOp cnot(int control, int target);
    static GateOp measure(int qubit, Basis basis = Basis::Z);
};

struct Circuit {
    int num_qubits = 1;
    std::vector<GateOp> ops;

    Circuit() = default;
    explicit Circuit(int n);

    // Builders validate wire indices and return *this for chaining.
    Circuit& add(GateOp op);
    Circuit& add_gate(Gate g, int qubit);
    Circuit& add_rotation(double theta, double phi, double lambda, int qubit);
    Circuit& add_cnot(int control, int target);
    Circuit& add_measure(int qubit, Basis basis = Basis::Z);

    void append(const Circuit& other);  // other must have the same width

    // Copy with wires renumbered: wire i of this circuit becomes
    // wire_map[i] in a circuit of the given width.
    Circuit embedded(int new_width, const std::vector<int>& wire_map) const;

    bool has_measurement() const;
    std::vector<int> measured_qubits() const;  // in op order

    // One op per line: "H 0", "U3 <theta> <phi> <lambda> 2", "CNOT 0 1",
    // "MEASURE 2 Z".  Round-trips through from_text.
    std::string to_text() const;
    static Circuit from_text(const std::string& text, int num_qubits = -1);  // -1: infer
};

// Applies one op (or a whole circuit) to a state.  Measure ops require an
// rng and append their outcome to `outcomes` when provided.  Measuring in a
// non-Z basis rotates into that basis, measures, and rotates back, leaving
// the matching eigenstate of the measured Pauli.
void apply_op(StateVector& sv, const GateOp& op, Rng* rng = nullptr,
              std::vector<int>* outcomes = nullptr);
void apply_circuit(StateVector& sv, const Circuit& c, Rng* rng = nullptr,
                   std::vector<int>* outcomes = nullptr);

// Evolves |0...0> through a measurement-free circuit.
StateVector evolve(const Circuit& c);

} // namespace qcheque
