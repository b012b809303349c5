#ifndef BAMA_CODEC_HPP
#define BAMA_CODEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bama {

// Byte-oriented back-end coders. Ids are wire values in the container flags.
enum class Codec : std::uint8_t {
    none = 0,
    rle = 1,
    lzw = 2,
    huffman = 3,
    arithmetic = 4,
};

// Exact-roundtrip coding: decode(c, encode(c, d)) == d for every codec,
// including empty input. Decoders validate their input and throw
// corrupt_stream (message carries the codec name and byte offset).
std::vector<std::uint8_t> codec_encode(Codec c, std::span<const std::uint8_t> data);
std::vector<std::uint8_t> codec_decode(Codec c, std::span<const std::uint8_t> data);

std::uint64_t coded_size_bits(Codec c, std::span<const std::uint8_t> data);

const char* codec_name(Codec c);
// Parses "none", "rle", "lzw", "huffman", "arith"; throws config_error.
Codec codec_from_name(const std::string& name);

namespace rle {
std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data);
} // namespace rle

namespace lzw {
std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data);
} // namespace lzw

namespace huffman {
std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data);
// Canonical code lengths for the byte histogram of data (0 = symbol absent).
// Exposed for the code-structure tests.
std::vector<int> code_lengths(std::span<const std::uint8_t> data);
} // namespace huffman

namespace arith {
std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data);
} // namespace arith

} // namespace bama

#endif // BAMA_CODEC_HPP
