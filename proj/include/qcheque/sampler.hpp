#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcheque/circuit.hpp"

namespace qcheque {

// Counts of measured bitstrings.  Keys follow the circuit's MEASURE ops:
// key[i] is the outcome ('0'/'1') of the i-th MEASURE in the circuit.
struct ShotHistogram {
    std::vector<int> qubit_order;
    std::map<std::string, uint64_t> counts;
    uint64_t shots = 0;

    uint64_t count_of(const std::string& key) const;
    double prob_of(const std::string& key) const;
    double marginal_p0(std::size_t position) const;  // P(key[position] == '0')
};

// Samples the measurement outcomes of `circuit` over `shots` repetitions.
// The circuit must measure at least one qubit and no qubit more than once.
//
// Determinism contract: a fixed (circuit, shots, seed) triple always yields
// the same histogram.  When every MEASURE follows the last gate, the state
// is evolved once and each shot draws exactly one uniform per measured
// qubit, in MEASURE order, walking the conditional outcome probabilities.
// Otherwise every shot replays the circuit, drawing one uniform per MEASURE
// op as it is reached.  Both paths sample the same distribution.
ShotHistogram sample_shots(const Circuit& circuit, uint64_t shots, uint64_t seed);

} // namespace qcheque
