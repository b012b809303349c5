#ifndef BAMA_BITS_HPP
#define BAMA_BITS_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bama {

// Bit container backed by bytes. Bit i lives in byte i/8 at position 7-(i%8),
// i.e. bit 0 of the vector is the most significant bit of byte 0. pack_bytes()
// therefore serializes with no conversion, and that byte layout is the one the
// container format ships. Pad bits past size() are kept at zero so whole-byte
// comparison works.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bit_count) : data_((bit_count + 7) / 8, 0), size_(bit_count) {}

    // Reads bit_count bits from a packed byte buffer; pad bits are ignored.
    static BitVector from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);
    // Test convenience: "10010" -> bits 1,0,0,1,0.
    static BitVector from_string(std::string_view zeros_and_ones);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (data_[i >> 3] >> (7 - (i & 7))) & 1u;
    }
    void set(std::size_t i, bool v) {
        assert(i < size_);
        std::uint8_t m = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
        if (v)
            data_[i >> 3] |= m;
        else
            data_[i >> 3] &= static_cast<std::uint8_t>(~m);
    }

    void push_back(bool v);
    void append(const BitVector& other);

    std::size_t count_ones() const;
    std::vector<std::size_t> one_positions() const;

    // len bits starting at begin; begin+len must be in range.
    BitVector slice(std::size_t begin, std::size_t len) const;

    std::vector<std::uint8_t> pack_bytes() const { return data_; }

    bool operator==(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> data_;
    std::size_t size_ = 0;
};

// A block cut out of a stream. nominal_size is the configured block size; the
// final block of a stream may hold fewer bits (never padded).
struct BitBlock {
    std::size_t index = 0;
    std::size_t nominal_size = 0;
    BitVector bits;
    bool operator==(const BitBlock&) const = default;
};

// Cuts a stream into blocks of block_size bits; the ragged tail keeps its
// true length. Empty stream -> empty list. Requires block_size >= 1.
std::vector<BitBlock> split_blocks(const BitVector& stream, std::size_t block_size);

// Inverse of split_blocks. Throws corrupt_stream when indices are not
// consecutive from zero.
BitVector join_blocks(std::span<const BitBlock> blocks);

} // namespace bama

#endif // BAMA_BITS_HPP
