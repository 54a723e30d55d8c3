#pragma once

#include <cstdint>
#include <string>

#include "qcheque/noise.hpp"

namespace qcheque {

// Options shared by the CLI commands; each command reads the fields it
// needs.  All exit paths return 0 (success), 1 (operational error) or
// 2 (statistical self-check failed).
struct RunConfig {
    uint64_t shots = 8192;
    uint64_t seed = 20250814;
    std::string noise;             // "", "none", "default" or "file=PATH"
    std::string format = "table";  // table | json | csv
    std::string out;               // also write the rendered report here

    // e2e options
    int m = 2;
    uint64_t amount = 42;
    std::string mode = "hashed";   // fixed | hashed
    std::string tamper = "none";   // none | amount | serial | signature | double_spend
    int swap_reps = 16;
    uint64_t swap_shots = 512;
    double lambda_alice = 0.9;
    double lambda_amount = 0.9;
    std::string log_path;          // write the message log (JSONL) here
};

// "none" -> all-zero, "default" -> calibrated parameters, "file=PATH" ->
// parsed from PATH; "" resolves to `fallback`.
NoiseParams resolve_noise(const std::string& spec, const std::string& fallback);

int cmd_table1(const RunConfig& cfg);      // generation-circuit statistics
int cmd_table2(const RunConfig& cfg);      // verification-circuit statistics
int cmd_tomography(const RunConfig& cfg);  // cheque and holder density matrices
int cmd_e2e(const RunConfig& cfg);         // full protocol run
int cmd_dump_circuit(const std::string& name);

} // namespace qcheque
