// Acceptance gate: one pass/fail line per criterion, exit code is the number
// of failures.  Every bound here is pinned; see README for the rationale.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qcheque/circuits.hpp"
#include "qcheque/experiments.hpp"
#include "qcheque/protocol.hpp"
#include "qcheque/swap_test.hpp"
#include "qcheque/tomography.hpp"

using namespace qcheque;

namespace {

constexpr double kC2 = 0.8535533905932737;  // cos^2(pi/8)

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

Check ideal_generation() {
    Check c;
    for (uint64_t seed : {1, 2, 20250814}) {
        const double p0 =
            sample_shots(cheque_generation_measured(), 8192, seed).marginal_p0(0);
        c.require(std::abs(p0 - 0.856) <= 0.02,
                  "seed " + std::to_string(seed) + ": p0 " + fmt(p0) +
                      " not within 0.02 of the reference 0.856");
        c.require(std::abs(p0 - kC2) <= 0.02,
                  "seed " + std::to_string(seed) + ": p0 " + fmt(p0) + " not within 0.02 of " +
                      fmt(kC2));
    }
    return c;
}

Check ideal_verification() {
    Check c;
    for (uint64_t shots : {1024, 4096, 8192, 65536}) {
        const ShotHistogram h = sample_shots(cheque_verification_circuit(), shots, 20250814);
        c.require(h.count_of("0") == shots,
                  std::to_string(shots) + " shots: " + std::to_string(h.count_of("1")) +
                      " nonzero outcomes");
    }
    return c;
}

Check calibrated_noise_bands() {
    Check c;
    const NoiseParams noise = NoiseParams::default_params();
    const double gen =
        noisy_sample(cheque_generation_measured(), 8192, 20250814, noise).marginal_p0(0);
    c.require(gen >= 0.73 && gen <= 0.78, "generation p0 " + fmt(gen) + " outside [0.73, 0.78]");
    const double ver =
        noisy_sample(cheque_verification_circuit(), 8192, 20250814, noise).marginal_p0(0);
    c.require(ver >= 0.80 && ver <= 0.87, "verification p0 " + fmt(ver) + " outside [0.80, 0.87]");
    return c;
}

Check tomography_recovery() {
    Check c;
    Mat2 target;
    target(0, 0) = kC2;
    target(0, 1) = 0.3535533905932738;
    target(1, 0) = 0.3535533905932738;
    target(1, 1) = 0.14644660940672624;
    const DensityMatrix2 exact_msg = exact_density(message_state_prep(), 0);
    c.require(exact_msg.max_entry_diff(DensityMatrix2(target)) <= 1e-9,
              "exact message density drifts from the closed form");

    const uint64_t shots = 8192;
    const DensityMatrix2 cheque_exact = exact_density(cheque_generation_circuit(), 2);
    const DensityMatrix2 cheque_sampled = reconstruct(
        estimate_expectations(cheque_generation_circuit(), 2, shots, 20250814));
    c.require(cheque_sampled.max_entry_diff(cheque_exact) <= 0.05,
              "sampled cheque-wire density off by " +
                  fmt(cheque_sampled.max_entry_diff(cheque_exact)));

    const DensityMatrix2 holder_sampled =
        reconstruct(estimate_expectations(Circuit(1), 0, shots, 20250815));
    c.require(holder_sampled.max_entry_diff(DensityMatrix2()) <= 0.05,
              "sampled holder density off by " +
                  fmt(holder_sampled.max_entry_diff(DensityMatrix2())));
    return c;
}

Check circuit_identities() {
    Check c;
    auto transposition = [](std::size_t dim, std::size_t i, std::size_t j) {
        CMatrix m = CMatrix::identity(dim);
        m(i, i) = 0.0;
        m(j, j) = 0.0;
        m(i, j) = 1.0;
        m(j, i) = 1.0;
        return m;
    };
    Circuit plain(2);
    plain.add_cnot(0, 1);
    c.require(max_abs_diff(circuit_unitary(reversed_cnot(0, 1, 2)), circuit_unitary(plain)) < 1e-10,
              "reversed cnot");
    c.require(max_abs_diff(circuit_unitary(swap_circuit(0, 1, 2)), transposition(4, 1, 2)) < 1e-10,
              "swap");
    c.require(max_abs_diff(circuit_unitary(toffoli(0, 1, 2, 3)), transposition(8, 6, 7)) < 1e-10,
              "toffoli");
    c.require(max_abs_diff(circuit_unitary(fredkin(0, 1, 2, 3)), transposition(8, 5, 6)) < 1e-10,
              "fredkin");
    return c;
}

Check swap_test_overlap_law() {
    Check c;
    Rng rng(20250814);
    const uint64_t shots = 65536;
    for (int i = 0; i < 50; ++i) {
        auto random_prep = [&rng]() {
            Circuit prep(1);
            const double theta = std::acos(1.0 - 2.0 * rng.uniform());
            const double phi = 2.0 * std::numbers::pi * rng.uniform();
            prep.add_rotation(theta, phi, 0.0, 0);
            return prep;
        };
        const Circuit a = random_prep();
        const Circuit b = random_prep();
        const double p = exact_swap_p0(a, b);
        const SwapTestResult r = run_swap_test(a, b, shots, derive_seed(777, i));
        const double tol =
            std::max(5.0 * std::sqrt(p * (1 - p) / static_cast<double>(shots)),
                     3.0 / static_cast<double>(shots));
        c.require(std::abs(r.p0_hat - p) <= tol,
                  "pair " + std::to_string(i) + ": |" + fmt(r.p0_hat) + " - " + fmt(p) + "| > " +
                      fmt(tol));
    }
    return c;
}

Check retrieval_branches() {
    Check c;
    const StateVector msg = evolve(message_state_prep());
    const StateVector base = evolve(cheque_generation_circuit());
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            StateVector s1 = base;
            s1.project(0, a);
            s1.project(1, b);
            for (int x = 0; x < 2; ++x) {
                StateVector s2 = s1;
                s2.apply_1q(gate_matrix(Gate::H), 3);  // X-basis readout of the bank wire
                s2.project(3, x);
                if (x == 1) s2.apply_1q(gate_matrix(Gate::Z), 2);
                const StateVector out = s2.with_qubit_removed(0, a)
                                            .with_qubit_removed(0, b)
                                            .with_qubit_removed(1, x);
                c.require(out.equal_up_to_phase(msg, 1e-10),
                          "branch (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(x) + ") does not restore the message");
            }
        }
    }
    return c;
}

Check protocol_decisions() {
    Check c;
    int honest_accepts = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        ProtocolConfig cfg;
        cfg.mode = OnewayMode::Fixed;
        Simulation sim(seed, cfg);
        sim.enroll();
        const QuantumCheque cheque = sim.sign_cheque(sim.gen(), 40 + seed);
        sim.give_cheque(cheque);
        if (sim.verify_cheque(cheque).status == VerifyStatus::Accept) ++honest_accepts;
    }
    c.require(honest_accepts == 100,
              "only " + std::to_string(honest_accepts) + "/100 honest runs accepted");

    int tamper_rejects = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Simulation sim(50000 + seed, ProtocolConfig{});
        sim.enroll();
        QuantumCheque cheque = sim.sign_cheque(sim.gen(), 40 + seed);
        sim.give_cheque(cheque);
        cheque.amount += 1;
        if (sim.verify_cheque(cheque).status != VerifyStatus::Accept) ++tamper_rejects;
    }
    c.require(tamper_rejects >= 95,
              "only " + std::to_string(tamper_rejects) + "/100 amount tampers rejected");

    Simulation sim(424242, ProtocolConfig{});
    sim.enroll();
    QuantumCheque cheque = sim.sign_cheque(sim.gen(), 42);
    sim.give_cheque(cheque);

    QuantumCheque bad_serial = cheque;
    bad_serial.s[0] = bad_serial.s[0] == '0' ? '1' : '0';
    c.require(sim.verify_cheque(bad_serial).status == VerifyStatus::UnknownSerial,
              "serial tamper not flagged as UnknownSerial");

    QuantumCheque bad_sig = cheque;
    bad_sig.sigma[0] = bad_sig.sigma[0] == '0' ? '1' : '0';
    c.require(sim.verify_cheque(bad_sig).status == VerifyStatus::BadSignature,
              "signature tamper not flagged as BadSignature");

    c.require(sim.verify_cheque(cheque).status == VerifyStatus::Accept,
              "honest cheque rejected after tamper attempts");

    for (uint64_t seed = 600; seed < 605; ++seed) {
        Simulation s(seed, ProtocolConfig{});
        s.enroll();
        const QuantumCheque q = s.sign_cheque(s.gen(), 42);
        s.give_cheque(q);
        s.verify_cheque(q);
        c.require(s.verify_cheque(q).status == VerifyStatus::AlreadySpent,
                  "seed " + std::to_string(seed) + ": double spend not AlreadySpent");
    }
    return c;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"ideal generation statistics", ideal_generation},
        {"ideal verification is exact", ideal_verification},
        {"calibrated noise reproduces the reference bands", calibrated_noise_bands},
        {"tomography recovers the prepared states", tomography_recovery},
        {"composite circuits match their unitaries", circuit_identities},
        {"swap test follows the overlap law", swap_test_overlap_law},
        {"retrieval restores the message on every branch", retrieval_branches},
        {"protocol accepts honest cheques and rejects tampering", protocol_decisions},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criteria[i].run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%zu/%zu] %s  %-52s (%.2f s)%s%s\n", i + 1, criteria.size(),
                    result.ok ? "PASS" : "FAIL", criteria[i].name, secs,
                    result.ok ? "" : ": ", result.detail.c_str());
        if (!result.ok) ++failures;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
