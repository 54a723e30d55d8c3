#include "qcheque/sampler.hpp"

#include <set>
#include <stdexcept>

namespace qcheque {

uint64_t ShotHistogram::count_of(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

double ShotHistogram::prob_of(const std::string& key) const {
    if (shots == 0) return 0.0;
    return static_cast<double>(count_of(key)) / static_cast<double>(shots);
}

double ShotHistogram::marginal_p0(std::size_t position) const {
    if (position >= qubit_order.size())
        throw std::out_of_range("ShotHistogram::marginal_p0: position out of range");
    if (shots == 0) return 0.0;
    uint64_t zeros = 0;
    for (const auto& [key, n] : counts)
        if (key[position] == '0') zeros += n;
    return static_cast<double>(zeros) / static_cast<double>(shots);
}

namespace {

void validate(const Circuit& circuit) {
    std::set<int> seen;
    for (const auto& op : circuit.ops) {
        if (op.kind != GateOp::Kind::Measure) continue;
        if (!seen.insert(op.q0).second)
            throw std::invalid_argument("sample_shots: qubit measured more than once");
    }
    if (seen.empty()) throw std::invalid_argument("sample_shots: circuit measures nothing");
}

bool measurements_trail(const Circuit& circuit) {
    bool measuring = false;
    for (const auto& op : circuit.ops) {
        if (op.kind == GateOp::Kind::Measure)
            measuring = true;
        else if (measuring)
            return false;
    }
    return true;
}

ShotHistogram sample_fast(const Circuit& circuit, uint64_t shots, uint64_t seed) {
    // Evolve once, then draw outcomes from the joint distribution of the
    // measured qubits via a binary tree of prefix probabilities.
    StateVector sv(circuit.num_qubits);
    std::vector<const GateOp*> measures;
    for (const auto& op : circuit.ops) {
        if (op.kind == GateOp::Kind::Measure) {
            if (op.basis != Basis::Z) sv.apply_1q(basis_rotation(op.basis), op.q0);
            measures.push_back(&op);
        } else {
            apply_op(sv, op);
        }
    }

    const std::size_t k = measures.size();
    ShotHistogram hist;
    hist.shots = shots;
    for (const auto* op : measures) hist.qubit_order.push_back(op->q0);

    // joint[o]: probability that the measured qubits, read in MEASURE order,
    // spell out the bits of o (first measurement = most significant bit).
    std::vector<double> joint(std::size_t(1) << k, 0.0);
    const int n = circuit.num_qubits;
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        const double p = std::norm(sv.amp(i));
        if (p == 0.0) continue;
        std::size_t o = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const int q = measures[j]->q0;
            const std::size_t bit = (i >> (n - 1 - q)) & 1;
            o |= bit << (k - 1 - j);
        }
        joint[o] += p;
    }

    // levels[j][prefix]: total probability of the length-j outcome prefix.
    std::vector<std::vector<double>> levels(k + 1);
    levels[k] = joint;
    for (std::size_t j = k; j > 0; --j) {
        levels[j - 1].resize(std::size_t(1) << (j - 1));
        for (std::size_t x = 0; x < levels[j - 1].size(); ++x)
            levels[j - 1][x] = levels[j][2 * x] + levels[j][2 * x + 1];
    }

    Rng rng(seed);
    std::string key(k, '0');
    for (uint64_t s = 0; s < shots; ++s) {
        std::size_t x = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const double denom = levels[j][x];
            const double p0 = denom > 0.0 ? levels[j + 1][2 * x] / denom : 1.0;
            const int bit = rng.uniform() < p0 ? 0 : 1;
            key[j] = static_cast<char>('0' + bit);
            x = 2 * x + bit;
        }
        ++hist.counts[key];
    }
    return hist;
}

ShotHistogram sample_slow(const Circuit& circuit, uint64_t shots, uint64_t seed) {
    ShotHistogram hist;
    hist.shots = shots;
    hist.qubit_order = circuit.measured_qubits();
    Rng rng(seed);
    std::string key(hist.qubit_order.size(), '0');
    std::vector<int> outcomes;
    for (uint64_t s = 0; s < shots; ++s) {
        outcomes.clear();
        StateVector sv(circuit.num_qubits);
        apply_circuit(sv, circuit, &rng, &outcomes);
        for (std::size_t j = 0; j < outcomes.size(); ++j)
            key[j] = static_cast<char>('0' + outcomes[j]);
        ++hist.counts[key];
    }
    return hist;
}

} // namespace

ShotHistogram sample_shots(const Circuit& circuit, uint64_t shots, uint64_t seed) {
    validate(circuit);
    // The joint table is fine for any circuit this library builds; fall back
    // to per-shot replay for very wide measurements.
    if (measurements_trail(circuit) && circuit.measured_qubits().size() <= 16)
        return sample_fast(circuit, shots, seed);
    return sample_slow(circuit, shots, seed);
}

} // namespace qcheque
