#include "bama/varint.hpp"

#include "bama/errors.hpp"

namespace bama {

void varint_append(std::uint64_t value, std::vector<std::uint8_t>& out) {
    while (value >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(value) | 0x80);
        value >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(value));
}

std::vector<std::uint8_t> varint_encode(std::uint64_t value) {
    std::vector<std::uint8_t> out;
    varint_append(value, out);
    return out;
}

std::size_t varint_size(std::uint64_t value) {
    std::size_t n = 1;
    while (value >= 0x80) {
        value >>= 7;
        ++n;
    }
    return n;
}

VarintResult varint_decode(std::span<const std::uint8_t> bytes, std::size_t offset) {
    std::uint64_t value = 0;
    std::size_t i = 0;
    for (;; ++i) {
        if (i >= 10)
            throw varint_overflow("varint: more than 10 bytes");
        if (offset + i >= bytes.size())
            throw corrupt_stream("varint: truncated input");
        std::uint8_t b = bytes[offset + i];
        // The 10th byte may only carry the final value bit of a 64-bit int.
        if (i == 9 && (b & 0xFE))
            throw varint_overflow("varint: value exceeds 64 bits");
        value |= static_cast<std::uint64_t>(b & 0x7F) << (7 * i);
        if (!(b & 0x80))
            break;
    }
    return VarintResult{value, i + 1};
}

} // namespace bama
