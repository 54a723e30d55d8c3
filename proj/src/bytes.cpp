#include "qcheque/bytes.hpp"

#include <stdexcept>

namespace qcheque {

namespace {
const char* kHexDigits = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("from_hex: invalid hex digit");
}
} // namespace

std::string to_hex(const Bytes& b) {
    std::string out;
    out.reserve(b.size() * 2);
    for (uint8_t v : b) {
        out.push_back(kHexDigits[v >> 4]);
        out.push_back(kHexDigits[v & 0xf]);
    }
    return out;
}

Bytes from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
    Bytes out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>((hex_value(s[2 * i]) << 4) | hex_value(s[2 * i + 1]));
    return out;
}

void append_u32_le(Bytes& b, uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void append_u64_le(Bytes& b, uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t read_u64_le(const Bytes& b, std::size_t offset) {
    if (offset + 8 > b.size()) throw std::out_of_range("read_u64_le: out of range");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[offset + i]) << (8 * i);
    return v;
}

Bytes random_bytes(Rng& rng, std::size_t n) {
    Bytes out(n);
    std::size_t i = 0;
    while (i < n) {
        uint64_t v = rng.next_u64();
        for (int k = 0; k < 8 && i < n; ++k, ++i) {
            out[i] = static_cast<uint8_t>(v & 0xff);
            v >>= 8;
        }
    }
    return out;
}

} // namespace qcheque
