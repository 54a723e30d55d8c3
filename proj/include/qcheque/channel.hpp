#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcheque {

enum class PartyId { Alice, Bob, BankMain, BankBranch };

std::string party_name(PartyId p);

struct Message {
    uint64_t seq = 0;
    PartyId from = PartyId::Alice;
    PartyId to = PartyId::Alice;
    std::string kind;
    nlohmann::json payload;

    nlohmann::json to_json() const;
};

// Ordered log of every classical message exchanged during a protocol run.
class MessageChannel {
public:
    const Message& send(PartyId from, PartyId to, std::string kind, nlohmann::json payload);

    const std::vector<Message>& log() const { return log_; }

    std::string to_jsonl() const;  // one message object per line
    void write_jsonl(const std::string& path) const;

private:
    std::vector<Message> log_;
    uint64_t next_seq_ = 0;
};

} // namespace qcheque
