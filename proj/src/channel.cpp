#include "qcheque/channel.hpp"

#include <fstream>
#include <stdexcept>

namespace qcheque {

std::string party_name(PartyId p) {
    switch (p) {
        case PartyId::Alice: return "Alice";
        case PartyId::Bob: return "Bob";
        case PartyId::BankMain: return "BankMain";
        case PartyId::BankBranch: return "BankBranch";
    }
    throw std::invalid_argument("party_name: unknown party");
}

nlohmann::json Message::to_json() const {
    return {{"seq", seq},
            {"from", party_name(from)},
            {"to", party_name(to)},
            {"kind", kind},
            {"payload", payload}};
}

const Message& MessageChannel::send(PartyId from, PartyId to, std::string kind,
                                    nlohmann::json payload) {
    Message m;
    m.seq = next_seq_++;
    m.from = from;
    m.to = to;
    m.kind = std::move(kind);
    m.payload = std::move(payload);
    log_.push_back(std::move(m));
    return log_.back();
}

std::string MessageChannel::to_jsonl() const {
    std::string out;
    for (const auto& m : log_) {
        out += m.to_json().dump();
        out += "\n";
    }
    return out;
}

void MessageChannel::write_jsonl(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("MessageChannel::write_jsonl: cannot open '" + path + "'");
    out << to_jsonl();
}

} // namespace qcheque
