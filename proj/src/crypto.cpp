#include "qcheque/crypto.hpp"

#include <stdexcept>

#include <sodium.h>

namespace qcheque {

namespace {

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

void check_out_len(std::size_t out_len) {
    if (out_len < crypto_generichash_BYTES_MIN || out_len > crypto_generichash_BYTES_MAX)
        throw std::invalid_argument("hash: output length out of range");
}

} // namespace

Bytes hash_bytes(const Bytes& data, std::size_t out_len) {
    ensure_sodium();
    check_out_len(out_len);
    Bytes out(out_len);
    crypto_generichash(out.data(), out.size(), data.data(), data.size(), nullptr, 0);
    return out;
}

Bytes keyed_hash(const Bytes& key, const Bytes& data, std::size_t out_len) {
    ensure_sodium();
    check_out_len(out_len);
    if (key.size() < crypto_generichash_KEYBYTES_MIN || key.size() > crypto_generichash_KEYBYTES_MAX)
        throw std::invalid_argument("keyed_hash: key length out of range");
    Bytes out(out_len);
    crypto_generichash(out.data(), out.size(), data.data(), data.size(), key.data(), key.size());
    return out;
}

KeyPair make_keypair(Rng& rng) {
    KeyPair kp;
    kp.sk = random_bytes(rng, 32);
    kp.pk = hash_bytes(kp.sk);
    return kp;
}

Bytes sign_mac(const Bytes& sk, const Bytes& msg) { return keyed_hash(sk, msg); }

bool check_mac(const Bytes& sk, const Bytes& msg, const Bytes& sig) {
    const Bytes expect = sign_mac(sk, msg);
    if (expect.size() != sig.size()) return false;
    return sodium_memcmp(expect.data(), sig.data(), sig.size()) == 0;
}

void SignatureOracle::register_keypair(const KeyPair& kp) {
    if (hash_bytes(kp.sk) != kp.pk)
        throw std::invalid_argument("SignatureOracle: public key does not match secret key");
    sk_by_pk_[to_hex(kp.pk)] = kp.sk;
}

bool SignatureOracle::known(const Bytes& pk) const {
    return sk_by_pk_.count(to_hex(pk)) != 0;
}

bool SignatureOracle::verify(const Bytes& pk, const Bytes& msg, const Bytes& sig) const {
    auto it = sk_by_pk_.find(to_hex(pk));
    if (it == sk_by_pk_.end()) return false;
    return check_mac(it->second, msg, sig);
}

} // namespace qcheque
