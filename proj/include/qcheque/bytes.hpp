#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcheque/rng.hpp"

namespace qcheque {

using Bytes = std::vector<uint8_t>;

std::string to_hex(const Bytes& b);
Bytes from_hex(const std::string& s);  // throws std::invalid_argument

void append_u32_le(Bytes& b, uint32_t v);
void append_u64_le(Bytes& b, uint64_t v);
uint64_t read_u64_le(const Bytes& b, std::size_t offset);

Bytes random_bytes(Rng& rng, std::size_t n);

} // namespace qcheque
