#include "qcheque/registry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcheque {

QubitHandle QubitRegistry::alloc_qubit(PartyId owner) { return alloc_group(owner, 1)[0]; }

std::vector<QubitHandle> QubitRegistry::alloc_group(PartyId owner, int n) {
    if (n < 1) throw std::invalid_argument("QubitRegistry::alloc_group: n must be positive");
    const uint64_t gid = next_group_++;
    Group g{StateVector(n), {}};
    std::vector<QubitHandle> handles;
    for (int i = 0; i < n; ++i) {
        const QubitHandle h = next_handle_++;
        g.wires.push_back(h);
        slots_[h] = Slot{gid, owner};
        handles.push_back(h);
    }
    groups_.emplace(gid, std::move(g));
    return handles;
}

bool QubitRegistry::is_live(QubitHandle h) const { return slots_.count(h) != 0; }

const QubitRegistry::Slot& QubitRegistry::slot_of(QubitHandle h) const {
    auto it = slots_.find(h);
    if (it == slots_.end())
        throw std::out_of_range("QubitRegistry: unknown or consumed handle " + std::to_string(h));
    return it->second;
}

PartyId QubitRegistry::owner_of(QubitHandle h) const { return slot_of(h).owner; }

void QubitRegistry::transfer(QubitHandle h, PartyId new_owner) {
    slot_of(h);
    slots_[h].owner = new_owner;
}

QubitRegistry::Group& QubitRegistry::group_of(QubitHandle h) {
    return groups_.at(slot_of(h).group);
}

const QubitRegistry::Group& QubitRegistry::group_of(QubitHandle h) const {
    return groups_.at(slot_of(h).group);
}

int QubitRegistry::wire_index(const Group& g, QubitHandle h) {
    auto it = std::find(g.wires.begin(), g.wires.end(), h);
    if (it == g.wires.end())
        throw std::runtime_error("QubitRegistry: handle missing from its group");
    return static_cast<int>(it - g.wires.begin());
}

void QubitRegistry::apply_gate(Gate g, QubitHandle q) {
    Group& grp = group_of(q);
    grp.sv.apply_1q(gate_matrix(g), wire_index(grp, q));
}

void QubitRegistry::apply_rotation(double theta, double phi, double lambda, QubitHandle q) {
    Group& grp = group_of(q);
    grp.sv.apply_1q(u3_matrix(theta, phi, lambda), wire_index(grp, q));
}

QubitRegistry::Group& QubitRegistry::merge_for(QubitHandle control, QubitHandle target) {
    const uint64_t gc = slot_of(control).group;
    const uint64_t gt = slot_of(target).group;
    if (gc == gt) return groups_.at(gc);
    Group& a = groups_.at(gc);
    Group& b = groups_.at(gt);
    Group merged{StateVector::kron(a.sv, b.sv), a.wires};
    merged.wires.insert(merged.wires.end(), b.wires.begin(), b.wires.end());
    for (QubitHandle h : b.wires) slots_[h].group = gc;
    groups_.erase(gt);
    groups_.at(gc) = std::move(merged);
    return groups_.at(gc);
}

void QubitRegistry::apply_cnot(QubitHandle control, QubitHandle target) {
    if (control == target)
        throw std::invalid_argument("QubitRegistry::apply_cnot: control equals target");
    slot_of(control);
    slot_of(target);
    Group& grp = merge_for(control, target);
    grp.sv.apply_cnot(wire_index(grp, control), wire_index(grp, target));
}

void QubitRegistry::apply_circuit(const Circuit& c, const std::vector<QubitHandle>& wires) {
    if (static_cast<int>(wires.size()) != c.num_qubits)
        throw std::invalid_argument("QubitRegistry::apply_circuit: wire count mismatch");
    if (c.has_measurement())
        throw std::invalid_argument("QubitRegistry::apply_circuit: circuit contains measurements");
    for (const auto& op : c.ops) {
        switch (op.kind) {
            case GateOp::Kind::Fixed:
                apply_gate(op.gate, wires[op.q0]);
                break;
            case GateOp::Kind::Rotation:
                apply_rotation(op.theta, op.phi, op.lambda, wires[op.q0]);
                break;
            case GateOp::Kind::Cnot:
                apply_cnot(wires[op.q0], wires[op.q1]);
                break;
            case GateOp::Kind::Measure:
                break;  // unreachable
        }
    }
}

int QubitRegistry::measure(QubitHandle q, Basis basis, Rng& rng) {
    const uint64_t gid = slot_of(q).group;
    Group& grp = groups_.at(gid);
    const int wi = wire_index(grp, q);
    if (basis != Basis::Z) grp.sv.apply_1q(basis_rotation(basis), wi);
    const int outcome = grp.sv.measure(wi, rng);
    if (grp.wires.size() == 1) {
        groups_.erase(gid);
    } else {
        grp.sv = grp.sv.with_qubit_removed(wi, outcome);
        grp.wires.erase(grp.wires.begin() + wi);
    }
    slots_.erase(q);
    return outcome;
}

void QubitRegistry::discard(QubitHandle q, Rng& rng) { measure(q, Basis::Z, rng); }

StateVector QubitRegistry::peek_pure_state(QubitHandle q) const {
    const Group& grp = group_of(q);
    const int wi = wire_index(grp, q);
    const DensityMatrix2 rho = grp.sv.reduced_density(wi);
    if (rho.purity() < 1.0 - 1e-9)
        throw std::runtime_error("QubitRegistry::peek_pure_state: qubit is entangled");
    // Leading eigenvector of the (effectively pure) reduced state, with the
    // global phase fixed so the first nonzero component is real positive.
    const auto [lmax, lmin] = rho.eigenvalues();
    (void)lmin;
    const cdouble r01 = rho.entry(0, 1);
    cdouble v0, v1;
    if (std::abs(r01) > 1e-12) {
        v0 = r01;
        v1 = cdouble{lmax, 0.0} - rho.entry(0, 0);
    } else if (rho.entry(0, 0).real() >= rho.entry(1, 1).real()) {
        v0 = 1.0;
        v1 = 0.0;
    } else {
        v0 = 0.0;
        v1 = 1.0;
    }
    const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= norm;
    v1 /= norm;
    const cdouble lead = std::abs(v0) > 1e-12 ? v0 : v1;
    const cdouble phase = lead / std::abs(lead);
    return StateVector::from_amplitudes({v0 / phase, v1 / phase});
}

std::vector<QubitHandle> QubitRegistry::live_handles() const {
    std::vector<QubitHandle> out;
    out.reserve(slots_.size());
    for (const auto& [h, slot] : slots_) out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qcheque
