#pragma once

#include <map>
#include <string>

#include "qcheque/bytes.hpp"

namespace qcheque {

// BLAKE2b digests (keyed and unkeyed): the only classical primitive the
// protocol relies on, used for signatures, key fingerprints and the hashed
// one-way state families.
Bytes hash_bytes(const Bytes& data, std::size_t out_len = 32);
Bytes keyed_hash(const Bytes& key, const Bytes& data, std::size_t out_len = 32);

struct KeyPair {
    Bytes sk;
    Bytes pk;  // pk = hash(sk)
};

KeyPair make_keypair(Rng& rng);

// Message authentication: sigma = keyed_hash(sk, msg).
Bytes sign_mac(const Bytes& sk, const Bytes& msg);
bool check_mac(const Bytes& sk, const Bytes& msg, const Bytes& sig);  // constant-time compare

// The bank side of signature checking: holds the secret key behind each
// registered public key and verifies tags presented against the public key.
class SignatureOracle {
public:
    void register_keypair(const KeyPair& kp);
    bool known(const Bytes& pk) const;
    bool verify(const Bytes& pk, const Bytes& msg, const Bytes& sig) const;

private:
    std::map<std::string, Bytes> sk_by_pk_;  // hex(pk) -> sk
};

} // namespace qcheque
