#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qcheque/circuits.hpp"
#include "qcheque/sampler.hpp"

using namespace qcheque;

TEST_CASE("fixed circuit, shots and seed give identical histograms") {
    Circuit c(2);
    c.add_gate(Gate::H, 0).add_cnot(0, 1).add_measure(0).add_measure(1);
    const ShotHistogram a = sample_shots(c, 4096, 99);
    const ShotHistogram b = sample_shots(c, 4096, 99);
    CHECK(a.counts == b.counts);
    CHECK(a.shots == 4096);

    const ShotHistogram other = sample_shots(c, 4096, 100);
    CHECK(a.counts != other.counts);
}

TEST_CASE("keys follow measure order, not wire order") {
    Circuit c(2);
    c.add_gate(Gate::X, 1).add_measure(1).add_measure(0);
    const ShotHistogram h = sample_shots(c, 256, 5);
    CHECK(h.qubit_order == std::vector<int>{1, 0});
    CHECK(h.count_of("10") == 256);
    CHECK(h.count_of("01") == 0);
    CHECK(h.prob_of("10") == doctest::Approx(1.0));
    CHECK(h.marginal_p0(0) == doctest::Approx(0.0));
    CHECK(h.marginal_p0(1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(h.marginal_p0(2), std::out_of_range);
}

TEST_CASE("bell pair outcomes are perfectly correlated") {
    Circuit c(2);
    c.add_gate(Gate::H, 0).add_cnot(0, 1).add_measure(0).add_measure(1);
    const uint64_t shots = 20000;
    const ShotHistogram h = sample_shots(c, shots, 7);
    CHECK(h.count_of("01") == 0);
    CHECK(h.count_of("10") == 0);
    CHECK(h.count_of("00") + h.count_of("11") == shots);
    // ~5 sigma around one half.
    const double sigma = std::sqrt(0.25 / static_cast<double>(shots));
    CHECK(std::abs(h.prob_of("00") - 0.5) < 5 * sigma);
}

TEST_CASE("ghz register collapses jointly") {
    Circuit c = ghz_prep();
    c.add_measure(0).add_measure(1).add_measure(2);
    const ShotHistogram h = sample_shots(c, 8192, 3);
    CHECK(h.count_of("000") + h.count_of("111") == 8192);
    CHECK(h.count_of("000") > 3500);
    CHECK(h.count_of("111") > 3500);
}

TEST_CASE("mid-circuit measurement collapses before later gates") {
    // Measure first, then copy the collapsed bit: outcomes always agree.
    Circuit c(2);
    c.add_gate(Gate::H, 0).add_measure(0).add_cnot(0, 1).add_measure(1);
    const ShotHistogram h = sample_shots(c, 4096, 11);
    CHECK(h.count_of("00") + h.count_of("11") == 4096);
    CHECK(h.count_of("00") > 1700);
}

TEST_CASE("x and y basis measurements pick the right eigenstates") {
    Circuit plus(1);
    plus.add_gate(Gate::H, 0).add_measure(0, Basis::X);
    CHECK(sample_shots(plus, 2048, 1).count_of("0") == 2048);

    Circuit y_plus(1);
    y_plus.add_gate(Gate::H, 0).add_gate(Gate::S, 0).add_measure(0, Basis::Y);
    CHECK(sample_shots(y_plus, 2048, 1).count_of("0") == 2048);

    Circuit y_minus(1);
    y_minus.add_gate(Gate::H, 0).add_gate(Gate::Sdg, 0).add_measure(0, Basis::Y);
    CHECK(sample_shots(y_minus, 2048, 1).count_of("1") == 2048);
}

TEST_CASE("deferred and interleaved sampling agree statistically") {
    Circuit trailing(2);
    trailing.add_gate(Gate::H, 0).add_cnot(0, 1).add_measure(0).add_measure(1);
    // An explicit identity after the measures forces the per-shot replay path.
    Circuit replay = trailing;
    replay.ops.insert(replay.ops.begin(), GateOp::fixed(Gate::I, 1));
    const uint64_t shots = 40000;
    const ShotHistogram a = sample_shots(trailing, shots, 21);
    const ShotHistogram b = sample_shots(replay, shots, 22);
    const double sigma = std::sqrt(0.25 / static_cast<double>(shots));
    CHECK(std::abs(a.prob_of("00") - b.prob_of("00")) < 7 * sigma);
    CHECK(b.count_of("01") == 0);
    CHECK(b.count_of("10") == 0);
}

TEST_CASE("sampling validates the measurement set") {
    Circuit none(1);
    none.add_gate(Gate::H, 0);
    CHECK_THROWS_AS(sample_shots(none, 16, 0), std::invalid_argument);

    Circuit twice(1);
    twice.add_measure(0).add_measure(0);
    CHECK_THROWS_AS(sample_shots(twice, 16, 0), std::invalid_argument);
}

TEST_CASE("histogram lookups on missing keys") {
    Circuit c(1);
    c.add_measure(0);
    const ShotHistogram h = sample_shots(c, 64, 0);
    CHECK(h.count_of("1") == 0);
    CHECK(h.prob_of("1") == doctest::Approx(0.0));
    CHECK(h.count_of("0") == 64);
}
