#ifndef BAMA_VARINT_HPP
#define BAMA_VARINT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bama {

// Base-128 varint, little-endian groups, high bit set on continuation bytes.
// A 64-bit value never needs more than 10 bytes.

void varint_append(std::uint64_t value, std::vector<std::uint8_t>& out);
std::vector<std::uint8_t> varint_encode(std::uint64_t value);
std::size_t varint_size(std::uint64_t value);

struct VarintResult {
    std::uint64_t value;
    std::size_t consumed;
};

// Decodes starting at `offset`. Throws corrupt_stream when the input ends on
// a continuation byte, varint_overflow when the encoding exceeds 10 bytes or
// the value exceeds 64 bits.
VarintResult varint_decode(std::span<const std::uint8_t> bytes, std::size_t offset = 0);

} // namespace bama

#endif // BAMA_VARINT_HPP
