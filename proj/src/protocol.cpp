#include "qcheque/protocol.hpp"

#include <numbers>
#include <stdexcept>

#include "qcheque/circuits.hpp"

namespace qcheque {

OnewayMode oneway_mode_from_name(const std::string& name) {
    if (name == "fixed") return OnewayMode::Fixed;
    if (name == "hashed") return OnewayMode::Hashed;
    throw std::invalid_argument("oneway_mode_from_name: unknown mode '" + name + "'");
}

std::string oneway_mode_name(OnewayMode mode) {
    return mode == OnewayMode::Fixed ? "fixed" : "hashed";
}

namespace {

// Two Bloch angles from a 16-byte digest: theta in [0, pi), phi in [0, 2 pi).
Circuit angles_to_prep(const Bytes& digest) {
    const double unit = 0x1.0p-64;
    const double theta = std::numbers::pi * (static_cast<double>(read_u64_le(digest, 0)) * unit);
    const double phi = 2.0 * std::numbers::pi * (static_cast<double>(read_u64_le(digest, 8)) * unit);
    Circuit c(1);
    c.add_rotation(theta, phi, 0.0, 0);
    return c;
}

} // namespace

Circuit oneway_f(OnewayMode mode, const Bytes& r, uint64_t amount, uint32_t index) {
    if (r.size() != 16) throw std::invalid_argument("oneway_f: r must be 16 bytes");
    if (mode == OnewayMode::Fixed) return message_state_prep();
    Bytes data;
    data.insert(data.end(), r.begin(), r.end());
    append_u64_le(data, amount);
    append_u32_le(data, index);
    return angles_to_prep(hash_bytes(data, 16));
}

Circuit oneway_g(OnewayMode mode, const Bytes& k, uint64_t id, const Bytes& r, uint64_t amount) {
    if (k.size() != 16) throw std::invalid_argument("oneway_g: k must be 16 bytes");
    if (r.size() != 16) throw std::invalid_argument("oneway_g: r must be 16 bytes");
    if (mode == OnewayMode::Fixed) return Circuit(1);  // |0>
    Bytes data;
    append_u64_le(data, id);
    data.insert(data.end(), r.begin(), r.end());
    append_u64_le(data, amount);
    return angles_to_prep(keyed_hash(k, data, 16));
}

nlohmann::json QuantumCheque::to_json() const {
    return {{"id", id},
            {"s", s},
            {"r", r},
            {"sigma", sigma},
            {"M", amount},
            {"m", m},
            {"handles", handles},
            {"psi_alice_handle", psi_alice_handle}};
}

QuantumCheque QuantumCheque::from_json(const nlohmann::json& j) {
    QuantumCheque c;
    c.id = j.at("id").get<uint64_t>();
    c.s = j.at("s").get<std::string>();
    c.r = j.at("r").get<std::string>();
    c.sigma = j.at("sigma").get<std::string>();
    c.amount = j.at("M").get<uint64_t>();
    c.m = j.at("m").get<int>();
    c.handles = j.at("handles").get<std::vector<QubitHandle>>();
    c.psi_alice_handle = j.at("psi_alice_handle").get<QubitHandle>();
    return c;
}

std::string verify_status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Accept: return "Accept";
        case VerifyStatus::UnknownSerial: return "UnknownSerial";
        case VerifyStatus::AlreadySpent: return "AlreadySpent";
        case VerifyStatus::BadSignature: return "BadSignature";
        case VerifyStatus::StateMismatch: return "StateMismatch";
    }
    throw std::invalid_argument("verify_status_name: unknown status");
}

namespace {

nlohmann::json decision_to_json(const AmplifiedDecision& d) {
    return {{"accept", d.accept},
            {"pooled_p0", d.pooled_p0},
            {"threshold", d.threshold},
            {"total_shots", d.total_shots},
            {"total_zeros", d.total_zeros}};
}

} // namespace

nlohmann::json VerifyResult::to_json() const {
    nlohmann::json j{{"status", verify_status_name(status)}, {"detail", detail}};
    if (holder_test) j["holder_test"] = decision_to_json(*holder_test);
    nlohmann::json tests = nlohmann::json::array();
    for (const auto& t : amount_tests) tests.push_back(decision_to_json(t));
    j["amount_tests"] = tests;
    return j;
}

Simulation::Simulation(uint64_t seed, ProtocolConfig config)
    : master_seed_(seed), rng_(derive_seed(seed, 0)), config_(std::move(config)) {
    if (config_.m < 1) throw std::invalid_argument("Simulation: config.m must be >= 1");
    config_.noise.validate();
}

uint64_t Simulation::next_swap_seed() { return derive_seed(master_seed_, 1 + swap_counter_++); }

uint64_t Simulation::enroll() {
    if (alice_id_ != 0) throw std::runtime_error("Simulation::enroll: already enrolled");
    channel_.send(PartyId::Alice, PartyId::BankMain, "enroll_request", nlohmann::json::object());

    const uint64_t id = next_account_++;
    const KeyPair kp = make_keypair(rng_);
    const Bytes k = random_bytes(rng_, 16);
    oracle_.register_keypair(kp);
    accounts_[id] = Account{kp.pk, k};

    // Secrets travel only on the Alice-bound leg.
    channel_.send(PartyId::BankMain, PartyId::Alice, "enroll_grant",
                  {{"id", id}, {"sk", to_hex(kp.sk)}, {"pk", to_hex(kp.pk)}, {"k", to_hex(k)}});

    alice_id_ = id;
    alice_sk_ = kp.sk;
    alice_pk_ = kp.pk;
    alice_k_ = k;
    return id;
}

std::string Simulation::gen() {
    if (alice_id_ == 0) throw std::runtime_error("Simulation::gen: enroll first");
    channel_.send(PartyId::Alice, PartyId::BankMain, "page_request", {{"id", alice_id_}});

    const Bytes serial = random_bytes(rng_, 16);
    const std::string serial_hex = to_hex(serial);

    AlicePage page;
    page.s = serial;
    PageRecord record;
    record.id = alice_id_;
    for (int i = 0; i < config_.m; ++i) {
        const auto triple = registry_.alloc_group(PartyId::BankMain, 3);
        registry_.apply_circuit(ghz_prep(), triple);
        registry_.transfer(triple[0], PartyId::Alice);
        registry_.transfer(triple[1], PartyId::Alice);
        page.a1.push_back(triple[0]);
        page.a2.push_back(triple[1]);
        record.bank_handles.push_back(triple[2]);
    }
    ledger_[serial_hex] = std::move(record);

    nlohmann::json a1 = page.a1, a2 = page.a2;
    channel_.send(PartyId::BankMain, PartyId::Alice, "page_grant",
                  {{"s", serial_hex}, {"a1_handles", a1}, {"a2_handles", a2}, {"m", config_.m}});

    alice_book_.push_back(std::move(page));
    return serial_hex;
}

QuantumCheque Simulation::sign_cheque(const std::string& serial_hex, uint64_t amount) {
    AlicePage* page = nullptr;
    for (auto& p : alice_book_)
        if (to_hex(p.s) == serial_hex) page = &p;
    if (page == nullptr)
        throw std::invalid_argument("Simulation::sign_cheque: unknown serial");
    if (page->used)
        throw std::runtime_error("Simulation::sign_cheque: page already used");
    page->used = true;

    const Bytes r = random_bytes(rng_, 16);
    for (int i = 0; i < config_.m; ++i) {
        const QubitHandle psi = registry_.alloc_qubit(PartyId::Alice);
        registry_.apply_circuit(oneway_f(config_.mode, r, amount, static_cast<uint32_t>(i)), {psi});
        // Entangling half of the Bell measurement, then the two deferred
        // Pauli corrections onto the cheque qubit (CZ built from H CNOT H).
        registry_.apply_cnot(psi, page->a1[i]);
        registry_.apply_gate(Gate::H, psi);
        registry_.apply_cnot(page->a1[i], page->a2[i]);
        registry_.apply_gate(Gate::H, page->a2[i]);
        registry_.apply_cnot(psi, page->a2[i]);
        registry_.apply_gate(Gate::H, page->a2[i]);
        // The measurement wires are uniform and unentangled now; read them
        // out and drop the bits.
        registry_.discard(psi, rng_);
        registry_.discard(page->a1[i], rng_);
    }

    const QubitHandle holder = registry_.alloc_qubit(PartyId::Alice);
    registry_.apply_circuit(oneway_g(config_.mode, alice_k_, alice_id_, r, amount), {holder});

    QuantumCheque cheque;
    cheque.id = alice_id_;
    cheque.s = serial_hex;
    cheque.r = to_hex(r);
    cheque.sigma = to_hex(sign_mac(alice_sk_, page->s));
    cheque.amount = amount;
    cheque.m = config_.m;
    cheque.handles = page->a2;
    cheque.psi_alice_handle = holder;
    return cheque;
}

void Simulation::give_cheque(const QuantumCheque& cheque) {
    for (QubitHandle h : cheque.handles) registry_.transfer(h, PartyId::Bob);
    registry_.transfer(cheque.psi_alice_handle, PartyId::Bob);
    channel_.send(PartyId::Alice, PartyId::Bob, "cheque", cheque.to_json());
}

VerifyResult Simulation::finish_reject(VerifyStatus status, std::string detail) {
    VerifyResult res;
    res.status = status;
    res.detail = std::move(detail);
    channel_.send(PartyId::BankBranch, PartyId::Bob, "verify_outcome",
                  {{"status", verify_status_name(status)}, {"detail", res.detail}});
    return res;
}

void Simulation::discard_presented(const QuantumCheque& cheque) {
    std::vector<QubitHandle> all = cheque.handles;
    all.push_back(cheque.psi_alice_handle);
    for (QubitHandle h : all)
        if (registry_.is_live(h)) registry_.discard(h, rng_);
}

VerifyResult Simulation::verify_cheque(const QuantumCheque& cheque) {
    channel_.send(PartyId::Bob, PartyId::BankBranch, "present_cheque", cheque.to_json());

    // Ledger first, so replays are answered from classical state alone.
    channel_.send(PartyId::BankBranch, PartyId::BankMain, "check_serial",
                  {{"id", cheque.id}, {"s", cheque.s}});
    auto ledger_it = ledger_.find(cheque.s);
    const std::string serial_status =
        ledger_it == ledger_.end() ? "unknown" : (ledger_it->second.spent ? "spent" : "ok");
    channel_.send(PartyId::BankMain, PartyId::BankBranch, "serial_status",
                  {{"status", serial_status}});
    if (serial_status == "unknown")
        return finish_reject(VerifyStatus::UnknownSerial, "serial not on the ledger");
    if (serial_status == "spent")
        return finish_reject(VerifyStatus::AlreadySpent, "serial already spent");
    PageRecord& record = ledger_it->second;

    // Classical signature over the serial.
    channel_.send(PartyId::BankBranch, PartyId::BankMain, "check_signature",
                  {{"id", cheque.id}, {"s", cheque.s}, {"sigma", cheque.sigma}});
    bool sig_ok = false;
    try {
        auto acct = accounts_.find(cheque.id);
        sig_ok = acct != accounts_.end() && record.id == cheque.id &&
                 oracle_.verify(acct->second.pk, from_hex(cheque.s), from_hex(cheque.sigma));
    } catch (const std::invalid_argument&) {
        sig_ok = false;  // malformed hex
    }
    channel_.send(PartyId::BankMain, PartyId::BankBranch, "signature_status", {{"ok", sig_ok}});
    if (!sig_ok) return finish_reject(VerifyStatus::BadSignature, "signature check failed");

    // Take custody of the presented qubits.
    if (cheque.m < 1 || static_cast<int>(cheque.handles.size()) != cheque.m ||
        record.bank_handles.size() != cheque.handles.size())
        return finish_reject(VerifyStatus::StateMismatch, "cheque shape mismatch");
    std::vector<QubitHandle> presented = cheque.handles;
    presented.push_back(cheque.psi_alice_handle);
    for (QubitHandle h : presented)
        if (!registry_.is_live(h))
            return finish_reject(VerifyStatus::StateMismatch, "cheque qubits unavailable");
    for (QubitHandle h : presented) registry_.transfer(h, PartyId::BankBranch);

    Bytes r;
    try {
        r = from_hex(cheque.r);
        if (r.size() != 16) throw std::invalid_argument("bad nonce length");
    } catch (const std::invalid_argument&) {
        discard_presented(cheque);
        return finish_reject(VerifyStatus::StateMismatch, "malformed nonce");
    }

    // The main office regenerates the reference preparations (only it knows
    // the account's shared key) and ships them to the branch as circuits.
    channel_.send(PartyId::BankBranch, PartyId::BankMain, "regen_request",
                  {{"id", cheque.id}, {"s", cheque.s}, {"r", cheque.r},
                   {"M", cheque.amount}, {"m", cheque.m}});
    const Bytes& account_k = accounts_.at(cheque.id).k;
    std::vector<std::string> f_texts;
    for (int i = 0; i < cheque.m; ++i)
        f_texts.push_back(
            oneway_f(config_.mode, r, cheque.amount, static_cast<uint32_t>(i)).to_text());
    const std::string g_text =
        oneway_g(config_.mode, account_k, cheque.id, r, cheque.amount).to_text();
    channel_.send(PartyId::BankMain, PartyId::BankBranch, "regen_preps",
                  {{"f", f_texts}, {"g", g_text}});

    // Retrieval: the main office measures its qubit of each triple in the X
    // basis and the branch applies the matching phase correction.
    for (int i = 0; i < cheque.m; ++i) {
        const int bit = registry_.measure(record.bank_handles[i], Basis::X, rng_);
        channel_.send(PartyId::BankMain, PartyId::BankBranch, "retrieval_bit",
                      {{"i", i}, {"bit", bit}});
        if (bit == 1) registry_.apply_gate(Gate::Z, cheque.handles[i]);
    }

    // Swap tests: the account-holder state first, then each amount state.
    VerifyResult res;
    bool pass = true;
    std::string detail;
    {
        const Circuit regen = Circuit::from_text(g_text, 1);
        const Circuit retrieved = state_prep_circuit(registry_.peek_pure_state(cheque.psi_alice_handle));
        const AmplifiedDecision d = amplified_swap_decision(
            retrieved, regen, config_.swap_reps, config_.swap_shots, config_.lambda_alice,
            next_swap_seed(), config_.noise.all_zero() ? nullptr : &config_.noise);
        res.holder_test = d;
        if (!d.accept) {
            pass = false;
            detail = "account-holder state rejected";
        }
    }
    if (pass) {
        for (int i = 0; i < cheque.m; ++i) {
            const Circuit regen = Circuit::from_text(f_texts[static_cast<std::size_t>(i)], 1);
            const Circuit retrieved = state_prep_circuit(registry_.peek_pure_state(cheque.handles[i]));
            const AmplifiedDecision d = amplified_swap_decision(
                retrieved, regen, config_.swap_reps, config_.swap_shots, config_.lambda_amount,
                next_swap_seed(), config_.noise.all_zero() ? nullptr : &config_.noise);
            res.amount_tests.push_back(d);
            if (!d.accept) {
                pass = false;
                detail = "amount state " + std::to_string(i) + " rejected";
                break;
            }
        }
    }

    nlohmann::json swap_report{{"pass", pass}};
    if (res.holder_test) swap_report["holder"] = decision_to_json(*res.holder_test);
    nlohmann::json amount_report = nlohmann::json::array();
    for (const auto& t : res.amount_tests) amount_report.push_back(decision_to_json(t));
    swap_report["amounts"] = amount_report;
    channel_.send(PartyId::BankBranch, PartyId::BankMain, "swap_results", swap_report);

    discard_presented(cheque);

    if (!pass) {
        res.status = VerifyStatus::StateMismatch;
        res.detail = detail;
        channel_.send(PartyId::BankBranch, PartyId::Bob, "verify_outcome",
                      {{"status", verify_status_name(res.status)}, {"detail", res.detail}});
        return res;
    }

    channel_.send(PartyId::BankBranch, PartyId::BankMain, "mark_spent", {{"s", cheque.s}});
    record.spent = true;
    channel_.send(PartyId::BankMain, PartyId::BankBranch, "spent_ok", {{"s", cheque.s}});

    res.status = VerifyStatus::Accept;
    res.detail = "all checks passed";
    channel_.send(PartyId::BankBranch, PartyId::Bob, "verify_outcome",
                  {{"status", verify_status_name(res.status)}, {"detail", res.detail}});
    return res;
}

} // namespace qcheque
