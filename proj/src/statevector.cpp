#include "qcheque/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qcheque {

namespace {
constexpr int kMaxQubits = 24;
}

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::length_error("StateVector: qubit count must be in [1, 24]");
    amps_.assign(std::size_t(1) << num_qubits, cdouble{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cdouble> amps) {
    std::size_t d = amps.size();
    if (d < 2 || (d & (d - 1)) != 0)
        throw std::invalid_argument("StateVector::from_amplitudes: length must be a power of two >= 2");
    int n = 0;
    while ((std::size_t(1) << n) < d) ++n;
    if (n > kMaxQubits)
        throw std::length_error("StateVector::from_amplitudes: more than 24 qubits");
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-6)
        throw std::invalid_argument("StateVector::from_amplitudes: amplitudes not normalized");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    StateVector sv(n);
    sv.amps_ = std::move(amps);
    return sv;
}

cdouble StateVector::amp(std::size_t index) const {
    if (index >= amps_.size()) throw std::out_of_range("StateVector::amp: index out of range");
    return amps_[index];
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_) throw std::out_of_range("StateVector: qubit index out of range");
}

void StateVector::apply_1q(const Mat2& u, int qubit) {
    check_qubit(qubit);
    if (!is_unitary(u, 1e-10))
        throw std::invalid_argument("StateVector::apply_1q: matrix is not unitary");
    const std::size_t stride = bit_mask(qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const cdouble a0 = amps_[i0];
            const cdouble a1 = amps_[i1];
            amps_[i0] = u(0, 0) * a0 + u(0, 1) * a1;
            amps_[i1] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target)
        throw std::invalid_argument("StateVector::apply_cnot: control equals target");
    const std::size_t cmask = bit_mask(control);
    const std::size_t tmask = bit_mask(target);
    const std::size_t dim = amps_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) std::swap(amps_[i], amps_[i | tmask]);
    }
}

double StateVector::prob0(int qubit) const {
    check_qubit(qubit);
    const std::size_t mask = bit_mask(qubit);
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == 0) p += std::norm(amps_[i]);
    return p;
}

int StateVector::measure(int qubit, Rng& rng) {
    const double p0 = prob0(qubit);
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    project(qubit, outcome);
    return outcome;
}

void StateVector::project(int qubit, int outcome) {
    check_qubit(qubit);
    if (outcome != 0 && outcome != 1)
        throw std::invalid_argument("StateVector::project: outcome must be 0 or 1");
    const std::size_t mask = bit_mask(qubit);
    const std::size_t want = outcome == 0 ? 0 : mask;
    double kept = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == want) kept += std::norm(amps_[i]);
    if (kept < 1e-300)
        throw std::runtime_error("StateVector::project: outcome has zero probability");
    const double inv = 1.0 / std::sqrt(kept);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        amps_[i] = ((i & mask) == want) ? amps_[i] * inv : cdouble{};
}

cdouble StateVector::inner_product(const StateVector& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("StateVector::inner_product: size mismatch");
    cdouble acc{};
    for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    return std::sqrt(n2);
}

DensityMatrix2 StateVector::reduced_density(int qubit) const {
    check_qubit(qubit);
    const std::size_t mask = bit_mask(qubit);
    double p00 = 0.0, p11 = 0.0;
    cdouble r01{};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) {
            p00 += std::norm(amps_[i]);
            r01 += amps_[i] * std::conj(amps_[i | mask]);
        } else {
            p11 += std::norm(amps_[i]);
        }
    }
    Mat2 m;
    m(0, 0) = p00;
    m(1, 1) = p11;
    m(0, 1) = r01;
    m(1, 0) = std::conj(r01);
    return DensityMatrix2(m);
}

StateVector StateVector::with_qubit_removed(int qubit, int outcome) const {
    check_qubit(qubit);
    if (n_ < 2)
        throw std::length_error("StateVector::with_qubit_removed: register has one qubit");
    if (outcome != 0 && outcome != 1)
        throw std::invalid_argument("StateVector::with_qubit_removed: outcome must be 0 or 1");
    const std::size_t mask = bit_mask(qubit);
    const std::size_t want = outcome == 0 ? 0 : mask;
    double dropped = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) != want) dropped += std::norm(amps_[i]);
    if (dropped > 1e-9)
        throw std::runtime_error("StateVector::with_qubit_removed: qubit is not in the stated basis state");
    std::vector<cdouble> out(amps_.size() / 2);
    const std::size_t low = mask - 1;  // bits below the removed qubit's bit
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::size_t i = ((j & ~low) << 1) | want | (j & low);
        out[j] = amps_[i];
    }
    StateVector sv(n_ - 1);
    sv.amps_ = std::move(out);
    return sv;
}

StateVector StateVector::kron(const StateVector& a, const StateVector& b) {
    if (a.n_ + b.n_ > kMaxQubits)
        throw std::length_error("StateVector::kron: combined register exceeds 24 qubits");
    StateVector sv(a.n_ + b.n_);
    for (std::size_t ia = 0; ia < a.amps_.size(); ++ia) {
        if (a.amps_[ia] == cdouble{}) continue;
        for (std::size_t ib = 0; ib < b.amps_.size(); ++ib)
            sv.amps_[ia * b.amps_.size() + ib] = a.amps_[ia] * b.amps_[ib];
    }
    return sv;
}

bool StateVector::equal_up_to_phase(const StateVector& other, double tol) const {
    if (n_ != other.n_) return false;
    std::size_t ref = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double m = std::abs(amps_[i]);
        if (m > best) {
            best = m;
            ref = i;
        }
    }
    if (best < 1e-12 || std::abs(other.amps_[ref]) < 1e-12) return false;
    cdouble phase = other.amps_[ref] / amps_[ref];
    phase /= std::abs(phase);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (std::abs(amps_[i] * phase - other.amps_[i]) > tol) return false;
    return true;
}

} // namespace qcheque
