// Command-line front end: probability tables, tomography, the end-to-end
// cheque protocol, and circuit dumps.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcheque/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum cheque protocol simulator"};
    app.require_subcommand(0, 1);

    qcheque::RunConfig cfg;
    std::string dump_name;

    app.set_config("--config", "", "Flat key=value config file; command-line flags win");
    app.add_option("--shots", cfg.shots, "Shots per sampled estimate (tomography: per basis)")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Master random seed")->capture_default_str();
    app.add_option("--noise", cfg.noise,
                   "Noise model: none | default | file=PATH (default: 'default' for "
                   "table1/table2/tomography, 'none' for e2e)");
    app.add_option("--format", cfg.format, "Output format: table | json | csv")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Also write the rendered report to this file");
    app.add_option("--dump-circuit", dump_name,
                   "Print a named circuit as text and exit (generation, verification, "
                   "message-prep, ghz, reversed-cnot, swap, toffoli, fredkin, swap-test)");

    app.add_option("--m", cfg.m, "Entangled triples per cheque page (e2e)")->capture_default_str();
    app.add_option("--amount", cfg.amount, "Cheque amount (e2e)")->capture_default_str();
    app.add_option("--mode", cfg.mode, "One-way state family: fixed | hashed (e2e)")
        ->capture_default_str();
    app.add_option("--tamper", cfg.tamper,
                   "Tamper scenario: none | amount | serial | signature | double_spend (e2e)")
        ->capture_default_str();
    app.add_option("--swap-reps", cfg.swap_reps, "Swap-test repetitions per check (e2e)")
        ->capture_default_str();
    app.add_option("--swap-shots", cfg.swap_shots, "Shots per swap-test repetition (e2e)")
        ->capture_default_str();
    app.add_option("--lambda-alice", cfg.lambda_alice,
                   "Overlap threshold for the account-holder state (e2e)")
        ->capture_default_str();
    app.add_option("--lambda-amount", cfg.lambda_amount,
                   "Overlap threshold for the amount states (e2e)")
        ->capture_default_str();
    app.add_option("--log", cfg.log_path, "Write the message log as JSONL to this file (e2e)");

    CLI::App* table1 = app.add_subcommand("table1", "Generation-circuit outcome statistics");
    CLI::App* table2 = app.add_subcommand("table2", "Verification-circuit outcome statistics");
    CLI::App* tomography =
        app.add_subcommand("tomography", "Cheque and account-holder density matrices");
    CLI::App* e2e = app.add_subcommand("e2e", "Run the cheque protocol end to end");
    for (CLI::App* sub : {table1, table2, tomography, e2e}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!dump_name.empty()) return qcheque::cmd_dump_circuit(dump_name);
        if (table1->parsed()) return qcheque::cmd_table1(cfg);
        if (table2->parsed()) return qcheque::cmd_table2(cfg);
        if (tomography->parsed()) return qcheque::cmd_tomography(cfg);
        if (e2e->parsed()) return qcheque::cmd_e2e(cfg);
        std::cout << app.help();
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
