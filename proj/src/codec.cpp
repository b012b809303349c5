#include "bama/codec.hpp"
#include "bama/errors.hpp"

namespace bama {

std::vector<std::uint8_t> codec_encode(Codec codec, std::span<const std::uint8_t> data) {
    switch (codec) {
    case Codec::none:
        return {data.begin(), data.end()};
    case Codec::rle:
        return rle::encode(data);
    case Codec::lzw:
        return lzw::encode(data);
    case Codec::huffman:
        return huffman::encode(data);
    case Codec::arithmetic:
        return arith::encode(data);
    }
    throw config_error("unknown codec id " + std::to_string(static_cast<int>(codec)));
}

std::vector<std::uint8_t> codec_decode(Codec codec, std::span<const std::uint8_t> data) {
    switch (codec) {
    case Codec::none:
        return {data.begin(), data.end()};
    case Codec::rle:
        return rle::decode(data);
    case Codec::lzw:
        return lzw::decode(data);
    case Codec::huffman:
        return huffman::decode(data);
    case Codec::arithmetic:
        return arith::decode(data);
    }
    throw config_error("unknown codec id " + std::to_string(static_cast<int>(codec)));
}

std::uint64_t coded_size_bits(Codec codec, std::span<const std::uint8_t> data) {
    return static_cast<std::uint64_t>(codec_encode(codec, data).size()) * 8;
}

const char* codec_name(Codec codec) {
    switch (codec) {
    case Codec::none:
        return "none";
    case Codec::rle:
        return "rle";
    case Codec::lzw:
        return "lzw";
    case Codec::huffman:
        return "huffman";
    case Codec::arithmetic:
        return "arith";
    }
    throw config_error("unknown codec id " + std::to_string(static_cast<int>(codec)));
}

Codec codec_from_name(const std::string& name) {
    if (name == "none")
        return Codec::none;
    if (name == "rle")
        return Codec::rle;
    if (name == "lzw")
        return Codec::lzw;
    if (name == "huffman")
        return Codec::huffman;
    if (name == "arith")
        return Codec::arithmetic;
    throw config_error("unknown codec name \"" + name + "\"");
}

} // namespace bama
