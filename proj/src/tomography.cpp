#include "qcheque/tomography.hpp"

#include <stdexcept>

namespace qcheque {

PauliExpectations exact_expectations(const Circuit& prep, int qubit) {
    const DensityMatrix2 rho = exact_density(prep, qubit);
    PauliExpectations e;
    e.x = 2.0 * rho.entry(0, 1).real();
    e.y = -2.0 * rho.entry(0, 1).imag();
    e.z = rho.entry(0, 0).real() - rho.entry(1, 1).real();
    return e;
}

PauliExpectations estimate_expectations(const Circuit& prep, int qubit,
                                        uint64_t shots_per_basis, uint64_t seed,
                                        const NoiseParams* noise) {
    if (prep.has_measurement())
        throw std::invalid_argument("estimate_expectations: preparation must be measurement-free");
    if (shots_per_basis == 0)
        throw std::invalid_argument("estimate_expectations: shots_per_basis must be positive");
    const Basis bases[3] = {Basis::X, Basis::Y, Basis::Z};
    double values[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        Circuit c = prep;
        c.add_measure(qubit, bases[i]);
        const uint64_t sub_seed = derive_seed(seed, static_cast<uint64_t>(i));
        const ShotHistogram hist = (noise == nullptr || noise->all_zero())
                                       ? sample_shots(c, shots_per_basis, sub_seed)
                                       : noisy_sample(c, shots_per_basis, sub_seed, *noise);
        const double p0 = hist.prob_of("0");
        values[i] = 2.0 * p0 - 1.0;
    }
    PauliExpectations e;
    e.x = values[0];
    e.y = values[1];
    e.z = values[2];
    return e;
}

DensityMatrix2 reconstruct(const PauliExpectations& e) {
    return DensityMatrix2::from_bloch(e.x, e.y, e.z);
}

DensityMatrix2 exact_density(const Circuit& prep, int qubit) {
    if (qubit < 0 || qubit >= prep.num_qubits)
        throw std::out_of_range("exact_density: qubit out of range");
    return evolve(prep).reduced_density(qubit);
}

} // namespace qcheque
