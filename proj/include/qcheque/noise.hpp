#pragma once

#include <cstdint>
#include <string>

#include "qcheque/sampler.hpp"

namespace qcheque {

// Stochastic Pauli + readout error model.
//   p1     - after every single-qubit gate (I included): X, Y or Z on its
//            wire, each with probability p1/3
//   p2     - after every CNOT: independently on the control and the target,
//            X, Y or Z each with probability p2/3
//   p_read - every recorded measurement bit flips with this probability
struct NoiseParams {
    double p1 = 0.0;
    double p2 = 0.0;
    double p_read = 0.0;

    bool all_zero() const;
    void validate() const;  // throws std::invalid_argument when out of [0, 1]

    // Calibrated to reproduce the bundled hardware reference statistics of
    // the generation and verification experiments; see README.
    static NoiseParams default_params();

    // Flat key=value file with keys p1, p2, p_read; '#' starts a comment.
    static NoiseParams from_file(const std::string& path);
};

// Monte-Carlo sampling with noise injection.  All-zero noise delegates to
// sample_shots and is bit-for-bit identical to it.
//
// Draw order per shot: after each gate site with nonzero error probability,
// one uniform u (CNOT has two sites: control then target); if u < p the
// error fires and u/p picks X, Y or Z.  Each MEASURE draws its projective
// uniform and, when p_read > 0, one more uniform for the readout flip.
// Measurement-basis rotations are noise-free.
ShotHistogram noisy_sample(const Circuit& circuit, uint64_t shots, uint64_t seed,
                           const NoiseParams& noise);

} // namespace qcheque
