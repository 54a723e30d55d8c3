#pragma once

#include <cstdint>
#include <random>

namespace qcheque {

// All randomness flows through Rng so that any run is exactly reproducible
// from a single seed.  Independent sub-streams (tomography bases, table rows,
// swap-test repetitions, ...) are seeded with derive_seed(master, stream)
// instead of consuming draws from the parent generator.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, n), rejection sampled to avoid modulo bias.
    uint64_t below(uint64_t n);

private:
    std::mt19937_64 gen_;
};

// One splitmix64 step: advances the state and returns a mixed output.
uint64_t splitmix64(uint64_t& state);

// Deterministically derives the seed of a named sub-stream.
uint64_t derive_seed(uint64_t master, uint64_t stream);

} // namespace qcheque
