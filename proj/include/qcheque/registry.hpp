#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qcheque/channel.hpp"
#include "qcheque/circuit.hpp"

namespace qcheque {

using QubitHandle = uint64_t;

// Owns every live qubit in a protocol run.  Qubits live in groups sharing
// one statevector; a CNOT across two groups merges them.  Measuring a qubit
// collapses it and removes it from its group, so a handle is single-use by
// construction.  Handle values are never reused.
class QubitRegistry {
public:
    QubitHandle alloc_qubit(PartyId owner);                      // fresh |0>
    std::vector<QubitHandle> alloc_group(PartyId owner, int n);  // fresh |0...0>

    bool is_live(QubitHandle h) const;
    PartyId owner_of(QubitHandle h) const;
    void transfer(QubitHandle h, PartyId new_owner);

    void apply_gate(Gate g, QubitHandle q);
    void apply_rotation(double theta, double phi, double lambda, QubitHandle q);
    void apply_cnot(QubitHandle control, QubitHandle target);

    // Runs a measurement-free circuit; wires[i] backs circuit wire i.  All
    // wires must already live in one group (or be brought together first
    // with apply_cnot); single-qubit ops never need that.
    void apply_circuit(const Circuit& c, const std::vector<QubitHandle>& wires);

    int measure(QubitHandle q, Basis basis, Rng& rng);  // collapses and consumes
    void discard(QubitHandle q, Rng& rng);              // measure, drop the bit

    // Reads the (pure) state of one qubit without consuming it.  Throws
    // std::runtime_error if the qubit is entangled with anything else
    // (reduced-state purity below 1 - 1e-9).
    StateVector peek_pure_state(QubitHandle q) const;

    std::size_t live_count() const { return slots_.size(); }
    std::vector<QubitHandle> live_handles() const;

private:
    struct Group {
        StateVector sv;
        std::vector<QubitHandle> wires;  // wires[i] sits on statevector qubit i
    };
    struct Slot {
        uint64_t group = 0;
        PartyId owner = PartyId::Alice;
    };

    const Slot& slot_of(QubitHandle h) const;
    Group& group_of(QubitHandle h);
    const Group& group_of(QubitHandle h) const;
    static int wire_index(const Group& g, QubitHandle h);
    // Merges the target's group into the control's; returns the merged group.
    Group& merge_for(QubitHandle control, QubitHandle target);

    std::unordered_map<uint64_t, Group> groups_;
    std::unordered_map<QubitHandle, Slot> slots_;
    uint64_t next_handle_ = 1;
    uint64_t next_group_ = 1;
};

} // namespace qcheque
