#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcheque/channel.hpp"
#include "qcheque/crypto.hpp"
#include "qcheque/noise.hpp"
#include "qcheque/registry.hpp"
#include "qcheque/swap_test.hpp"

namespace qcheque {

// How the one-way state families are instantiated.
//   Fixed  - amount-independent reference states (the tabletop demo
//            setting): f prepares the message state for every (r, M, i)
//            and g prepares |0>.  Amount tampering is invisible here.
//   Hashed - Bloch angles derived from BLAKE2b digests of the inputs, so
//            different amounts yield different state families and amount
//            tampering fails the swap tests.
enum class OnewayMode { Fixed, Hashed };

OnewayMode oneway_mode_from_name(const std::string& name);
std::string oneway_mode_name(OnewayMode mode);

// Single-wire circuit preparing f(r, M, i).
Circuit oneway_f(OnewayMode mode, const Bytes& r, uint64_t amount, uint32_t index);
// Single-wire circuit preparing g(k, id, r, M).
Circuit oneway_g(OnewayMode mode, const Bytes& k, uint64_t id, const Bytes& r, uint64_t amount);

struct ProtocolConfig {
    int m = 2;                           // entangled triples per cheque page
    OnewayMode mode = OnewayMode::Hashed;
    double lambda_alice = 0.9;           // overlap threshold, account-holder state
    double lambda_amount = 0.9;          // overlap threshold, amount states
    int swap_reps = 16;
    uint64_t swap_shots = 512;
    NoiseParams noise;                   // applied to swap-test sampling only
};

struct QuantumCheque {
    uint64_t id = 0;      // account id
    std::string s;        // serial (hex)
    std::string r;        // nonce (hex)
    std::string sigma;    // MAC over the serial bytes (hex)
    uint64_t amount = 0;  // serialized as "M"
    int m = 0;
    std::vector<QubitHandle> handles;  // cheque qubits, one per triple
    QubitHandle psi_alice_handle = 0;  // account-holder state qubit

    nlohmann::json to_json() const;
    static QuantumCheque from_json(const nlohmann::json& j);
};

enum class VerifyStatus { Accept, UnknownSerial, AlreadySpent, BadSignature, StateMismatch };

std::string verify_status_name(VerifyStatus s);

struct VerifyResult {
    VerifyStatus status = VerifyStatus::StateMismatch;
    std::string detail;
    std::optional<AmplifiedDecision> holder_test;
    std::vector<AmplifiedDecision> amount_tests;

    nlohmann::json to_json() const;
};

// One bank (main office plus branch), one account holder (Alice) and one
// payee (Bob), sharing a qubit registry and a logged classical channel.
//
// Determinism: protocol-level draws come from sub-stream 0 of the seed;
// the n-th swap test of the run uses sub-stream n+1.
class Simulation {
public:
    Simulation(uint64_t seed, ProtocolConfig config);

    // Opens the account: the bank issues the signing key pair and the
    // shared key, both delivered only on the Alice-bound channel.
    uint64_t enroll();

    // Issues one cheque page: a fresh serial plus m entangled triples whose
    // first two qubits go to Alice while the bank keeps the third.
    // Returns the serial (hex).
    std::string gen();

    // Writes a cheque against an unused page: entangles f(r, M, i) into
    // each triple, prepares the account-holder state and signs the serial.
    QuantumCheque sign_cheque(const std::string& serial_hex, uint64_t amount);

    // Hands the cheque (classical data plus qubits) from Alice to Bob.
    void give_cheque(const QuantumCheque& cheque);

    // Bob presents the cheque at the branch.  Checks run in order: ledger
    // (unknown/spent), signature, then the quantum swap tests; the page is
    // marked spent only when everything passes.
    VerifyResult verify_cheque(const QuantumCheque& cheque);

    const ProtocolConfig& config() const { return config_; }
    QubitRegistry& registry() { return registry_; }
    const QubitRegistry& registry() const { return registry_; }
    MessageChannel& channel() { return channel_; }
    const MessageChannel& channel() const { return channel_; }

    // Introspection for tests (e.g. the channel secrecy audit).
    const Bytes& alice_sk() const { return alice_sk_; }
    const Bytes& alice_k() const { return alice_k_; }
    uint64_t alice_id() const { return alice_id_; }

private:
    struct AlicePage {
        Bytes s;
        std::vector<QubitHandle> a1, a2;
        bool used = false;
    };
    struct PageRecord {
        uint64_t id = 0;
        std::vector<QubitHandle> bank_handles;
        bool spent = false;
    };
    struct Account {
        Bytes pk;
        Bytes k;
    };

    uint64_t next_swap_seed();
    VerifyResult finish_reject(VerifyStatus status, std::string detail);
    void discard_presented(const QuantumCheque& cheque);

    uint64_t master_seed_;
    Rng rng_;
    ProtocolConfig config_;
    QubitRegistry registry_;
    MessageChannel channel_;
    SignatureOracle oracle_;

    // Alice
    uint64_t alice_id_ = 0;
    Bytes alice_sk_, alice_pk_, alice_k_;
    std::vector<AlicePage> alice_book_;

    // Bank
    std::map<uint64_t, Account> accounts_;
    std::map<std::string, PageRecord> ledger_;  // hex serial -> record
    uint64_t next_account_ = 1;

    uint64_t swap_counter_ = 0;
};

} // namespace qcheque
