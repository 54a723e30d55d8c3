#include "qcheque/noise.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace qcheque {

bool NoiseParams::all_zero() const { return p1 == 0.0 && p2 == 0.0 && p_read == 0.0; }

void NoiseParams::validate() const {
    auto check = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument(std::string("NoiseParams: ") + name + " must be in [0, 1]");
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_read, "p_read");
}

NoiseParams NoiseParams::default_params() {
    // Frozen by tools/calibrate_noise against the reference run statistics.
    NoiseParams p;
    p.p1 = 0.012;
    p.p2 = 0.010;
    p.p_read = 0.070;
    return p;
}

NoiseParams NoiseParams::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("NoiseParams::from_file: cannot open '" + path + "'");
    NoiseParams p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("NoiseParams::from_file: line " + std::to_string(lineno) +
                                        ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("NoiseParams::from_file: line " + std::to_string(lineno) +
                                        ": bad value '" + value + "'");
        }
        if (key == "p1")
            p.p1 = v;
        else if (key == "p2")
            p.p2 = v;
        else if (key == "p_read")
            p.p_read = v;
        else
            throw std::invalid_argument("NoiseParams::from_file: line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

namespace {

Gate pick_pauli(double unit) {
    // unit is uniform in [0, 1): thirds select X, Y or Z.
    if (unit < 1.0 / 3.0) return Gate::X;
    if (unit < 2.0 / 3.0) return Gate::Y;
    return Gate::Z;
}

void maybe_error(StateVector& sv, int qubit, double p, Rng& rng) {
    if (p <= 0.0) return;
    const double u = rng.uniform();
    if (u < p) sv.apply_1q(gate_matrix(pick_pauli(u / p)), qubit);
}

void validate_circuit(const Circuit& circuit) {
    std::set<int> seen;
    for (const auto& op : circuit.ops) {
        if (op.kind != GateOp::Kind::Measure) continue;
        if (!seen.insert(op.q0).second)
            throw std::invalid_argument("noisy_sample: qubit measured more than once");
    }
    if (seen.empty()) throw std::invalid_argument("noisy_sample: circuit measures nothing");
}

} // namespace

ShotHistogram noisy_sample(const Circuit& circuit, uint64_t shots, uint64_t seed,
                           const NoiseParams& noise) {
    noise.validate();
    if (noise.all_zero()) return sample_shots(circuit, shots, seed);
    validate_circuit(circuit);

    ShotHistogram hist;
    hist.shots = shots;
    hist.qubit_order = circuit.measured_qubits();

    Rng rng(seed);
    std::string key(hist.qubit_order.size(), '0');
    for (uint64_t s = 0; s < shots; ++s) {
        StateVector sv(circuit.num_qubits);
        std::size_t slot = 0;
        for (const auto& op : circuit.ops) {
            switch (op.kind) {
                case GateOp::Kind::Fixed:
                case GateOp::Kind::Rotation:
                    apply_op(sv, op);
                    maybe_error(sv, op.q0, noise.p1, rng);
                    break;
                case GateOp::Kind::Cnot:
                    apply_op(sv, op);
                    maybe_error(sv, op.q0, noise.p2, rng);
                    maybe_error(sv, op.q1, noise.p2, rng);
                    break;
                case GateOp::Kind::Measure: {
                    if (op.basis != Basis::Z) sv.apply_1q(basis_rotation(op.basis), op.q0);
                    int outcome = sv.measure(op.q0, rng);
                    if (op.basis != Basis::Z) sv.apply_1q(adjoint(basis_rotation(op.basis)), op.q0);
                    if (noise.p_read > 0.0 && rng.uniform() < noise.p_read) outcome ^= 1;
                    key[slot++] = static_cast<char>('0' + outcome);
                    break;
                }
            }
        }
        ++hist.counts[key];
    }
    return hist;
}

} // namespace qcheque
