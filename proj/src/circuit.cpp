#include "qcheque/circuit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcheque {

GateOp GateOp::fixed(Gate g, int qubit) {
    GateOp op;
    op.kind = Kind::Fixed;
    op.gate = g;
    op.q0 = qubit;
    return op;
}

GateOp GateOp::rotation(double theta, double phi, double lambda, int qubit) {
    GateOp op;
    op.kind = Kind::Rotation;
    op.theta = theta;
    op.phi = phi;
    op.lambda = lambda;
    op.q0 = qubit;
    return op;
}

GateOp GateOp::cnot(int control, int target) {
    GateOp op;
    op.kind = Kind::Cnot;
    op.q0 = control;
    op.q1 = target;
    return op;
}

GateOp GateOp::measure(int qubit, Basis basis) {
    GateOp op;
    op.kind = Kind::Measure;
    op.q0 = qubit;
    op.basis = basis;
    return op;
}

Circuit::Circuit(int n) : num_qubits(n) {
    if (n < 1) throw std::invalid_argument("Circuit: width must be positive");
}

Circuit& Circuit::add(GateOp op) {
    auto check = [this](int q) {
        if (q < 0 || q >= num_qubits)
            throw std::invalid_argument("Circuit::add: wire index out of range");
    };
    check(op.q0);
    if (op.kind == GateOp::Kind::Cnot) {
        check(op.q1);
        if (op.q0 == op.q1)
            throw std::invalid_argument("Circuit::add: CNOT control equals target");
    }
    ops.push_back(op);
    return *this;
}

Circuit& Circuit::add_gate(Gate g, int qubit) { return add(GateOp::fixed(g, qubit)); }

Circuit& Circuit::add_rotation(double theta, double phi, double lambda, int qubit) {
    return add(GateOp::rotation(theta, phi, lambda, qubit));
}

Circuit& Circuit::add_cnot(int control, int target) { return add(GateOp::cnot(control, target)); }

Circuit& Circuit::add_measure(int qubit, Basis basis) { return add(GateOp::measure(qubit, basis)); }

void Circuit::append(const Circuit& other) {
    if (other.num_qubits != num_qubits)
        throw std::invalid_argument("Circuit::append: width mismatch");
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

Circuit Circuit::embedded(int new_width, const std::vector<int>& wire_map) const {
    if (static_cast<int>(wire_map.size()) != num_qubits)
        throw std::invalid_argument("Circuit::embedded: wire map size mismatch");
    std::vector<bool> used(new_width, false);
    for (int w : wire_map) {
        if (w < 0 || w >= new_width)
            throw std::invalid_argument("Circuit::embedded: mapped wire out of range");
        if (used[w]) throw std::invalid_argument("Circuit::embedded: duplicate mapped wire");
        used[w] = true;
    }
    Circuit out(new_width);
    for (GateOp op : ops) {
        op.q0 = wire_map[op.q0];
        if (op.kind == GateOp::Kind::Cnot) op.q1 = wire_map[op.q1];
        out.add(op);
    }
    return out;
}

bool Circuit::has_measurement() const {
    for (const auto& op : ops)
        if (op.kind == GateOp::Kind::Measure) return true;
    return false;
}

std::vector<int> Circuit::measured_qubits() const {
    std::vector<int> qs;
    for (const auto& op : ops)
        if (op.kind == GateOp::Kind::Measure) qs.push_back(op.q0);
    return qs;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string Circuit::to_text() const {
    std::string out;
    for (const auto& op : ops) {
        switch (op.kind) {
            case GateOp::Kind::Fixed:
                out += gate_name(op.gate) + " " + std::to_string(op.q0);
                break;
            case GateOp::Kind::Rotation:
                out += "U3 " + format_double(op.theta) + " " + format_double(op.phi) + " " +
                       format_double(op.lambda) + " " + std::to_string(op.q0);
                break;
            case GateOp::Kind::Cnot:
                out += "CNOT " + std::to_string(op.q0) + " " + std::to_string(op.q1);
                break;
            case GateOp::Kind::Measure:
                out += "MEASURE " + std::to_string(op.q0) + " " + basis_name(op.basis);
                break;
        }
        out += "\n";
    }
    return out;
}

Circuit Circuit::from_text(const std::string& text, int num_qubits) {
    struct Parsed {
        std::vector<GateOp> ops;
        int max_wire = 0;
    } parsed;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&lineno](const std::string& why) {
        throw std::invalid_argument("Circuit::from_text: line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        GateOp op;
        if (head == "CNOT") {
            int c, t;
            if (!(ls >> c >> t)) fail("CNOT needs two wires");
            op = GateOp::cnot(c, t);
        } else if (head == "MEASURE") {
            int q;
            std::string b;
            if (!(ls >> q >> b)) fail("MEASURE needs a wire and a basis");
            op = GateOp::measure(q, basis_from_name(b));
        } else if (head == "U3") {
            double th, ph, la;
            int q;
            if (!(ls >> th >> ph >> la >> q)) fail("U3 needs three angles and a wire");
            op = GateOp::rotation(th, ph, la, q);
        } else {
            int q;
            if (!(ls >> q)) fail("gate needs a wire");
            op = GateOp::fixed(gate_from_name(head), q);
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
        if (op.q0 < 0 || (op.kind == GateOp::Kind::Cnot && op.q1 < 0)) fail("negative wire");
        parsed.max_wire = std::max(parsed.max_wire, std::max(op.q0, op.q1));
        parsed.ops.push_back(op);
    }
    const int width = num_qubits < 0 ? parsed.max_wire + 1 : num_qubits;
    Circuit c(width);
    for (const auto& op : parsed.ops) c.add(op);
    return c;
}

void apply_op(StateVector& sv, const GateOp& op, Rng* rng, std::vector<int>* outcomes) {
    switch (op.kind) {
        case GateOp::Kind::Fixed:
            sv.apply_1q(gate_matrix(op.gate), op.q0);
            return;
        case GateOp::Kind::Rotation:
            sv.apply_1q(u3_matrix(op.theta, op.phi, op.lambda), op.q0);
            return;
        case GateOp::Kind::Cnot:
            sv.apply_cnot(op.q0, op.q1);
            return;
        case GateOp::Kind::Measure: {
            if (rng == nullptr)
                throw std::invalid_argument("apply_op: MEASURE encountered without an rng");
            const Mat2 rot = basis_rotation(op.basis);
            if (op.basis != Basis::Z) sv.apply_1q(rot, op.q0);
            const int outcome = sv.measure(op.q0, *rng);
            if (op.basis != Basis::Z) sv.apply_1q(adjoint(rot), op.q0);
            if (outcomes != nullptr) outcomes->push_back(outcome);
            return;
        }
    }
    throw std::invalid_argument("apply_op: unknown op kind");
}

void apply_circuit(StateVector& sv, const Circuit& c, Rng* rng, std::vector<int>* outcomes) {
    if (sv.num_qubits() != c.num_qubits)
        throw std::invalid_argument("apply_circuit: register width mismatch");
    for (const auto& op : c.ops) apply_op(sv, op, rng, outcomes);
}

StateVector evolve(const Circuit& c) {
    if (c.has_measurement())
        throw std::invalid_argument("evolve: circuit contains measurements");
    StateVector sv(c.num_qubits);
    apply_circuit(sv, c);
    return sv;
}

} // namespace qcheque
