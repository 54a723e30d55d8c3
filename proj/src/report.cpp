#include "qcheque/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "qcheque/circuits.hpp"
#include "qcheque/experiments.hpp"
#include "qcheque/protocol.hpp"
#include "qcheque/tomography.hpp"

namespace qcheque {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Writes the rendered report to stdout and, when requested, to cfg.out.
void emit(const RunConfig& cfg, const nlohmann::json& report, const std::string& human,
          const std::string& csv) {
    std::string text;
    if (cfg.format == "json")
        text = report.dump(2) + "\n";
    else if (cfg.format == "csv")
        text = csv;
    else if (cfg.format == "table")
        text = human;
    else
        throw std::invalid_argument("unknown format '" + cfg.format + "'");
    std::cout << text;
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
        f << text;
    }
}

nlohmann::json config_json(const RunConfig& cfg, const NoiseParams& noise) {
    return {{"shots", cfg.shots},
            {"seed", cfg.seed},
            {"noise", {{"p1", noise.p1}, {"p2", noise.p2}, {"p_read", noise.p_read}}}};
}

struct TableRow {
    std::string label;
    uint64_t shots = 0;
    double p0 = 0.0;
    double p1 = 0.0;
    uint64_t seed = 0;
};

// Six canonical rows: the noise model and the ideal simulator, each at
// 1024 / 4096 / 8192 shots.  Row i uses sub-stream i of the seed.
std::vector<TableRow> probability_table(const Circuit& circuit, const NoiseParams& noise,
                                        uint64_t seed) {
    const uint64_t shot_plan[3] = {1024, 4096, 8192};
    std::vector<TableRow> rows;
    uint64_t stream = 0;
    for (const char* label : {"noisy", "ideal"}) {
        const bool ideal = std::string(label) == "ideal";
        for (uint64_t shots : shot_plan) {
            TableRow row;
            row.label = label;
            row.shots = shots;
            row.seed = derive_seed(seed, stream++);
            const ShotHistogram hist = ideal ? sample_shots(circuit, shots, row.seed)
                                             : noisy_sample(circuit, shots, row.seed, noise);
            row.p0 = hist.prob_of("0");
            row.p1 = hist.prob_of("1");
            rows.push_back(row);
        }
    }
    return rows;
}

int run_table_command(const RunConfig& cfg, const char* command, const Circuit& circuit,
                      double ideal_p0) {
    const NoiseParams noise = resolve_noise(cfg.noise, "default");
    const std::vector<TableRow> rows = probability_table(circuit, noise, cfg.seed);

    nlohmann::json jrows = nlohmann::json::array();
    std::string human = "label  shots     P(0)     P(1)\n";
    std::string csv = "label,shots,p0,p1,seed\n";
    for (const auto& row : rows) {
        jrows.push_back({{"label", row.label},
                         {"shots", row.shots},
                         {"p0", row.p0},
                         {"p1", row.p1},
                         {"seed", row.seed}});
        char line[128];
        std::snprintf(line, sizeof line, "%-6s %6llu   %.4f   %.4f\n", row.label.c_str(),
                      static_cast<unsigned long long>(row.shots), row.p0, row.p1);
        human += line;
        char cline[160];
        std::snprintf(cline, sizeof cline, "%s,%llu,%.6f,%.6f,%llu\n", row.label.c_str(),
                      static_cast<unsigned long long>(row.shots), row.p0, row.p1,
                      static_cast<unsigned long long>(row.seed));
        csv += cline;
    }

    nlohmann::json report{{"command", command},
                          {"config", config_json(cfg, noise)},
                          {"rows", jrows},
                          {"timestamp", utc_timestamp()}};
    emit(cfg, report, human, csv);

    // Self-check: the largest ideal row must sit within five binomial sigmas
    // of the exact probability.
    for (const auto& row : rows) {
        if (row.label != "ideal" || row.shots != 8192) continue;
        const double sigma =
            std::sqrt(std::max(ideal_p0 * (1.0 - ideal_p0), 1e-12) / static_cast<double>(row.shots));
        if (std::abs(row.p0 - ideal_p0) > 5.0 * sigma) {
            std::cerr << "self-check failed: ideal " << row.shots << "-shot P(0) " << row.p0
                      << " deviates from " << ideal_p0 << " by more than 5 sigma\n";
            return 2;
        }
    }
    return 0;
}

nlohmann::json matrix_json(const DensityMatrix2& rho) {
    nlohmann::json j = rho.to_json();
    j["physical"] = rho.is_physical(1e-9);
    return j;
}

std::string matrix_human(const std::string& title, const DensityMatrix2& rho) {
    std::string out = title + "\n";
    for (int r = 0; r < 2; ++r) {
        out += "  [";
        for (int c = 0; c < 2; ++c) {
            const cdouble v = rho.entry(r, c);
            out += fmt(" %9.6f", v.real()) + fmt("%+9.6fi", v.imag());
        }
        out += " ]\n";
    }
    return out;
}

std::string matrix_csv_row(const std::string& name, const DensityMatrix2& rho,
                           const std::string& fid, const std::string& td) {
    std::string row = name;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            row += "," + fmt("%.6f", rho.entry(r, c).real());
            row += "," + fmt("%.6f", rho.entry(r, c).imag());
        }
    row += "," + fid + "," + td + "\n";
    return row;
}

} // namespace

NoiseParams resolve_noise(const std::string& spec, const std::string& fallback) {
    const std::string& s = spec.empty() ? fallback : spec;
    if (s == "none") return NoiseParams{};
    if (s == "default") return NoiseParams::default_params();
    if (s.rfind("file=", 0) == 0) return NoiseParams::from_file(s.substr(5));
    throw std::invalid_argument("noise must be none, default or file=PATH (got '" + s + "')");
}

int cmd_table1(const RunConfig& cfg) {
    const double ideal_p0 = std::pow(std::cos(std::numbers::pi / 8), 2);
    return run_table_command(cfg, "table1", cheque_generation_measured(), ideal_p0);
}

int cmd_table2(const RunConfig& cfg) {
    return run_table_command(cfg, "table2", cheque_verification_circuit(), 1.0);
}

int cmd_tomography(const RunConfig& cfg) {
    const NoiseParams noise = resolve_noise(cfg.noise, "default");
    const uint64_t shots = cfg.shots;

    const Circuit generation = cheque_generation_circuit();
    const Circuit holder_prep(1);  // |0>, the demo-mode account-holder state

    struct Entry {
        std::string name;
        DensityMatrix2 rho;
        bool has_ref = false;
        double fid = 0.0, td = 0.0;
    };
    std::vector<Entry> entries;

    // Cheque qubit: exact payload state, exact circuit marginal, then
    // sampled tomography of the generation circuit (ideal and noisy).
    const DensityMatrix2 cheque_ref = exact_density(message_state_prep(), 0);
    const DensityMatrix2 cheque_marginal = exact_density(generation, 2);
    const DensityMatrix2 cheque_ideal =
        reconstruct(estimate_expectations(generation, 2, shots, derive_seed(cfg.seed, 0)));
    const DensityMatrix2 cheque_noisy =
        reconstruct(estimate_expectations(generation, 2, shots, derive_seed(cfg.seed, 1), &noise));

    // Account-holder qubit: |0> reference plus sampled tomography.
    const DensityMatrix2 holder_ref = exact_density(holder_prep, 0);
    const DensityMatrix2 holder_ideal =
        reconstruct(estimate_expectations(holder_prep, 0, shots, derive_seed(cfg.seed, 2)));
    const DensityMatrix2 holder_noisy =
        reconstruct(estimate_expectations(holder_prep, 0, shots, derive_seed(cfg.seed, 3), &noise));

    auto push = [&entries](std::string name, const DensityMatrix2& rho) {
        entries.push_back({std::move(name), rho, false, 0.0, 0.0});
    };
    auto push_vs = [&entries](std::string name, const DensityMatrix2& rho,
                              const DensityMatrix2& ref) {
        entries.push_back({std::move(name), rho, true, fidelity(rho, ref), trace_distance(rho, ref)});
    };
    push("cheque_reference_payload", cheque_ref);
    push("cheque_exact_marginal", cheque_marginal);
    push_vs("cheque_sampled_ideal", cheque_ideal, cheque_ref);
    push_vs("cheque_sampled_noisy", cheque_noisy, cheque_ref);
    push("holder_reference", holder_ref);
    push_vs("holder_sampled_ideal", holder_ideal, holder_ref);
    push_vs("holder_sampled_noisy", holder_noisy, holder_ref);

    nlohmann::json matrices;
    std::string human;
    std::string csv =
        "matrix,re00,im00,re01,im01,re10,im10,re11,im11,fidelity_vs_reference,"
        "trace_distance_vs_reference\n";
    for (const auto& e : entries) {
        nlohmann::json j = matrix_json(e.rho);
        std::string title = e.name;
        if (e.has_ref) {
            j["fidelity_vs_reference"] = e.fid;
            j["trace_distance_vs_reference"] = e.td;
            title += "  (fidelity " + fmt("%.4f", e.fid) + ", trace distance " + fmt("%.4f", e.td) + ")";
        }
        matrices[e.name] = j;
        human += matrix_human(title, e.rho);
        csv += matrix_csv_row(e.name, e.rho, e.has_ref ? fmt("%.6f", e.fid) : "",
                              e.has_ref ? fmt("%.6f", e.td) : "");
    }

    nlohmann::json report{{"command", "tomography"},
                          {"config", config_json(cfg, noise)},
                          {"matrices", matrices},
                          {"timestamp", utc_timestamp()}};
    emit(cfg, report, human, csv);

    // Self-check: ideal sampling must reproduce its own exact target
    // entrywise; the tolerance scales as ~8 binomial sigmas per entry.
    if (shots >= 1024) {
        const double tol = 4.0 / std::sqrt(static_cast<double>(shots));
        if (cheque_ideal.max_entry_diff(cheque_marginal) > tol ||
            holder_ideal.max_entry_diff(holder_ref) > tol) {
            std::cerr << "self-check failed: ideal sampled tomography strayed from the exact "
                         "state by more than "
                      << tol << "\n";
            return 2;
        }
    }
    return 0;
}

int cmd_e2e(const RunConfig& cfg) {
    const NoiseParams noise = resolve_noise(cfg.noise, "none");

    ProtocolConfig pc;
    pc.m = cfg.m;
    pc.mode = oneway_mode_from_name(cfg.mode);
    pc.lambda_alice = cfg.lambda_alice;
    pc.lambda_amount = cfg.lambda_amount;
    pc.swap_reps = cfg.swap_reps;
    pc.swap_shots = cfg.swap_shots;
    pc.noise = noise;

    Simulation sim(cfg.seed, pc);
    sim.enroll();
    const std::string serial = sim.gen();
    QuantumCheque cheque = sim.sign_cheque(serial, cfg.amount);
    sim.give_cheque(cheque);

    auto flip_first_hex_byte = [](std::string hex) {
        Bytes b = from_hex(hex);
        b.at(0) ^= 0xff;
        return to_hex(b);
    };

    VerifyResult result;
    if (cfg.tamper == "none") {
        result = sim.verify_cheque(cheque);
    } else if (cfg.tamper == "amount") {
        QuantumCheque t = cheque;
        t.amount += 1;
        result = sim.verify_cheque(t);
    } else if (cfg.tamper == "serial") {
        QuantumCheque t = cheque;
        t.s = flip_first_hex_byte(t.s);
        result = sim.verify_cheque(t);
    } else if (cfg.tamper == "signature") {
        QuantumCheque t = cheque;
        t.sigma = flip_first_hex_byte(t.sigma);
        result = sim.verify_cheque(t);
    } else if (cfg.tamper == "double_spend") {
        sim.verify_cheque(cheque);
        result = sim.verify_cheque(cheque);
    } else {
        throw std::invalid_argument("unknown tamper mode '" + cfg.tamper + "'");
    }

    if (!cfg.log_path.empty()) sim.channel().write_jsonl(cfg.log_path);

    nlohmann::json outcome = result.to_json();
    outcome["serial"] = serial;
    outcome["message_count"] = sim.channel().log().size();

    nlohmann::json config = config_json(cfg, noise);
    config["m"] = cfg.m;
    config["amount"] = cfg.amount;
    config["mode"] = cfg.mode;
    config["tamper"] = cfg.tamper;
    config["swap_reps"] = cfg.swap_reps;
    config["swap_shots"] = cfg.swap_shots;
    config["lambda_alice"] = cfg.lambda_alice;
    config["lambda_amount"] = cfg.lambda_amount;

    std::string human;
    human += "serial:  " + serial + "\n";
    human += "tamper:  " + cfg.tamper + "\n";
    human += "outcome: " + verify_status_name(result.status) + " (" + result.detail + ")\n";
    auto describe = [&human](const std::string& name, const AmplifiedDecision& d) {
        human += name + ": p0=" + fmt("%.4f", d.pooled_p0) + " threshold=" + fmt("%.4f", d.threshold) +
                 (d.accept ? " pass" : " fail") + "\n";
    };
    if (result.holder_test) describe("holder test", *result.holder_test);
    for (std::size_t i = 0; i < result.amount_tests.size(); ++i)
        describe("amount test " + std::to_string(i), result.amount_tests[i]);
    human += "messages: " + std::to_string(sim.channel().log().size());
    if (!cfg.log_path.empty()) human += " (log: " + cfg.log_path + ")";
    human += "\n";

    std::string csv = "status,detail,serial,tamper,message_count\n";
    csv += verify_status_name(result.status) + "," + result.detail + "," + serial + "," +
           cfg.tamper + "," + std::to_string(sim.channel().log().size()) + "\n";

    nlohmann::json report{{"command", "e2e"},
                          {"config", config},
                          {"outcome", outcome},
                          {"timestamp", utc_timestamp()}};
    emit(cfg, report, human, csv);
    return 0;
}

int cmd_dump_circuit(const std::string& name) {
    Circuit c(1);
    if (name == "generation")
        c = cheque_generation_measured();
    else if (name == "verification")
        c = cheque_verification_circuit();
    else if (name == "message-prep")
        c = message_state_prep();
    else if (name == "ghz")
        c = ghz_prep();
    else if (name == "reversed-cnot")
        c = reversed_cnot(0, 1, 2);
    else if (name == "swap")
        c = swap_circuit(0, 1, 2);
    else if (name == "toffoli")
        c = toffoli(0, 1, 2, 3);
    else if (name == "fredkin")
        c = fredkin(0, 1, 2, 3);
    else if (name == "swap-test")
        c = swap_test_circuit(message_state_prep(), Circuit(1));
    else
        throw std::invalid_argument(
            "unknown circuit '" + name +
            "' (expected generation, verification, message-prep, ghz, reversed-cnot, swap, "
            "toffoli, fredkin or swap-test)");
    std::cout << c.to_text();
    return 0;
}

} // namespace qcheque
