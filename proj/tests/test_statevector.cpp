#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qcheque/gates.hpp"
#include "qcheque/statevector.hpp"

using namespace qcheque;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector plus_state() {
    StateVector sv(1);
    sv.apply_1q(gate_matrix(Gate::H), 0);
    return sv;
}

} // namespace

TEST_CASE("fresh register is |0...0>") {
    StateVector sv(3);
    CHECK(sv.num_qubits() == 3);
    CHECK(sv.dim() == 8);
    CHECK(std::abs(sv.amp(0) - cdouble{1.0, 0.0}) == 0.0);
    for (int q = 0; q < 3; ++q) CHECK(sv.prob0(q) == doctest::Approx(1.0));
    CHECK(sv.norm() == doctest::Approx(1.0));
}

TEST_CASE("qubit count bounds") {
    CHECK_THROWS_AS(StateVector(0), std::length_error);
    CHECK_THROWS_AS(StateVector(-2), std::length_error);
    CHECK_THROWS_AS(StateVector(25), std::length_error);
    CHECK_NOTHROW(StateVector(1));
}

TEST_CASE("qubit 0 is the most significant index bit") {
    StateVector sv(3);
    sv.apply_1q(gate_matrix(Gate::X), 0);
    CHECK(std::abs(sv.amp(4)) == doctest::Approx(1.0));  // |100>

    StateVector sw(3);
    sw.apply_1q(gate_matrix(Gate::X), 2);
    CHECK(std::abs(sw.amp(1)) == doctest::Approx(1.0));  // |001>
}

TEST_CASE("from_amplitudes validates shape and norm") {
    auto sv = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
    CHECK(sv.num_qubits() == 1);
    CHECK(sv.amp(1).real() == doctest::Approx(kInvSqrt2));

    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("amp bounds checked") {
    StateVector sv(2);
    CHECK_THROWS_AS(sv.amp(4), std::out_of_range);
}

TEST_CASE("apply_1q rejects non-unitary input") {
    StateVector sv(1);
    Mat2 m;
    m(0, 0) = 2.0;
    m(1, 1) = 1.0;
    CHECK_THROWS_AS(sv.apply_1q(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(sv.apply_1q(gate_matrix(Gate::H), 1), std::out_of_range);
}

TEST_CASE("H is an involution") {
    StateVector sv(2);
    sv.apply_1q(gate_matrix(Gate::H), 1);
    CHECK(sv.prob0(1) == doctest::Approx(0.5));
    sv.apply_1q(gate_matrix(Gate::H), 1);
    CHECK(std::abs(sv.amp(0) - cdouble{1.0, 0.0}) < 1e-12);
}

TEST_CASE("cnot truth table") {
    StateVector sv(2);
    sv.apply_1q(gate_matrix(Gate::X), 0);  // |10>
    sv.apply_cnot(0, 1);
    CHECK(std::abs(sv.amp(3)) == doctest::Approx(1.0));  // |11>

    StateVector sw(2);
    sw.apply_1q(gate_matrix(Gate::X), 1);  // |01>
    sw.apply_cnot(0, 1);
    CHECK(std::abs(sw.amp(1)) == doctest::Approx(1.0));  // control 0: unchanged

    CHECK_THROWS_AS(sv.apply_cnot(1, 1), std::invalid_argument);
}

TEST_CASE("measure collapses and respects Born statistics") {
    Rng rng(1234);
    StateVector sv = plus_state();
    const int outcome = sv.measure(0, rng);
    CHECK((outcome == 0 || outcome == 1));
    CHECK(sv.prob0(0) == doctest::Approx(outcome == 0 ? 1.0 : 0.0));

    // Frequencies over fresh copies: 10000 draws, ~6 sigma band.
    int ones = 0;
    for (int i = 0; i < 10000; ++i) {
        StateVector s = plus_state();
        ones += s.measure(0, rng);
    }
    CHECK(ones > 4700);
    CHECK(ones < 5300);
}

TEST_CASE("project post-selects and renormalizes") {
    StateVector sv(2);
    sv.apply_1q(gate_matrix(Gate::H), 0);
    sv.project(0, 1);
    CHECK(std::abs(sv.amp(2)) == doctest::Approx(1.0));
    CHECK(sv.norm() == doctest::Approx(1.0));

    StateVector zero(1);
    CHECK_THROWS_AS(zero.project(0, 1), std::runtime_error);
    CHECK_THROWS_AS(zero.project(0, 2), std::invalid_argument);
}

TEST_CASE("inner product is conjugate-symmetric") {
    StateVector a(1);
    auto b = StateVector::from_amplitudes({kInvSqrt2, cdouble{0.0, kInvSqrt2}});
    const cdouble ab = a.inner_product(b);
    const cdouble ba = b.inner_product(a);
    CHECK(ab.real() == doctest::Approx(kInvSqrt2));
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);

    StateVector wide(2);
    CHECK_THROWS_AS(a.inner_product(wide), std::invalid_argument);
}

TEST_CASE("reduced density of a Bell pair is maximally mixed") {
    StateVector sv(2);
    sv.apply_1q(gate_matrix(Gate::H), 0);
    sv.apply_cnot(0, 1);
    for (int q = 0; q < 2; ++q) {
        const DensityMatrix2 rho = sv.reduced_density(q);
        CHECK(rho.entry(0, 0).real() == doctest::Approx(0.5));
        CHECK(rho.entry(1, 1).real() == doctest::Approx(0.5));
        CHECK(std::abs(rho.entry(0, 1)) < 1e-12);
        CHECK(rho.purity() == doctest::Approx(0.5));
    }
}

TEST_CASE("reduced density of a product state is pure") {
    StateVector sv(2);
    sv.apply_1q(gate_matrix(Gate::H), 1);
    const DensityMatrix2 rho = sv.reduced_density(1);
    CHECK(rho.purity() == doctest::Approx(1.0));
    CHECK(rho.entry(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("with_qubit_removed shrinks a definite wire") {
    StateVector sv = StateVector::kron(StateVector(1), plus_state());
    const StateVector rest = sv.with_qubit_removed(0, 0);
    CHECK(rest.num_qubits() == 1);
    CHECK(rest.amp(0).real() == doctest::Approx(kInvSqrt2));
    CHECK(rest.amp(1).real() == doctest::Approx(kInvSqrt2));

    StateVector bell(2);
    bell.apply_1q(gate_matrix(Gate::H), 0);
    bell.apply_cnot(0, 1);
    CHECK_THROWS_AS(bell.with_qubit_removed(0, 0), std::runtime_error);

    StateVector one(1);
    CHECK_THROWS_AS(one.with_qubit_removed(0, 0), std::length_error);
}

TEST_CASE("kron places the first factor on the high wires") {
    StateVector one(1);
    one.apply_1q(gate_matrix(Gate::X), 0);
    const StateVector sv = StateVector::kron(one, StateVector(1));
    CHECK(std::abs(sv.amp(2)) == doctest::Approx(1.0));  // |10>

    const StateVector sw = StateVector::kron(plus_state(), one);
    CHECK(sw.amp(1).real() == doctest::Approx(kInvSqrt2));  // |01>
    CHECK(sw.amp(3).real() == doctest::Approx(kInvSqrt2));  // |11>
}

TEST_CASE("equal_up_to_phase ignores a global phase only") {
    const StateVector a = plus_state();
    StateVector b = plus_state();
    const cdouble phase = std::polar(1.0, 0.7331);
    b = StateVector::from_amplitudes({b.amp(0) * phase, b.amp(1) * phase});
    CHECK(a.equal_up_to_phase(b));

    const auto minus = StateVector::from_amplitudes({kInvSqrt2, -kInvSqrt2});
    CHECK_FALSE(a.equal_up_to_phase(minus));
}
