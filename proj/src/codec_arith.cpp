#include "bama/codec.hpp"
#include "bama/errors.hpp"
#include "bama/varint.hpp"

// Adaptive binary arithmetic coder, order-0 over bits.
//   varint  original bit count (8x the byte count; nothing follows when 0)
//   payload range-coder bytes
// State is the 32-bit interval [x1, x2]; a bit splits it at
//   xmid = x1 + floor(range * p / 4096)
// where p is the model's 12-bit probability of a 1. Bytes settle off the top
// whenever x1 and x2 agree on their high byte, and the final x1 is flushed in
// full, so the decoder consumes exactly the bytes written: its running x
// equals the encoder's final x1, which every chosen subinterval contains.
// The model is a pair of counts, halved above 64k so it keeps adapting.

namespace bama::arith {

namespace {

class Model {
public:
    std::uint32_t p1() const {
        std::uint32_t p = (c1_ * 4096) / (c0_ + c1_);
        return p < 1 ? 1 : (p > 4095 ? 4095 : p);
    }
    void update(bool bit) {
        if (bit)
            ++c1_;
        else
            ++c0_;
        if (c0_ + c1_ > 65536) {
            c0_ = (c0_ + 1) >> 1;
            c1_ = (c1_ + 1) >> 1;
        }
    }

private:
    std::uint32_t c0_ = 1, c1_ = 1;
};

std::uint32_t split(std::uint32_t x1, std::uint32_t x2, std::uint32_t p) {
    std::uint64_t range = static_cast<std::uint64_t>(x2) - x1;
    std::uint32_t xmid =
        x1 + static_cast<std::uint32_t>(((range >> 12) * p) + (((range & 0xFFF) * p) >> 12));
    if (xmid >= x2)
        xmid = x2 - 1;
    return xmid;
}

} // namespace

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    varint_append(data.size() * 8, out);
    if (data.empty())
        return out;
    Model model;
    std::uint32_t x1 = 0, x2 = 0xFFFFFFFFu;
    for (std::uint8_t byte : data) {
        for (int i = 7; i >= 0; --i) {
            bool bit = (byte >> i) & 1;
            std::uint32_t xmid = split(x1, x2, model.p1());
            if (bit)
                x2 = xmid;
            else
                x1 = xmid + 1;
            model.update(bit);
            while (((x1 ^ x2) & 0xFF000000u) == 0) {
                out.push_back(static_cast<std::uint8_t>(x2 >> 24));
                x1 <<= 8;
                x2 = (x2 << 8) | 0xFF;
            }
        }
    }
    for (int i = 24; i >= 0; i -= 8)
        out.push_back(static_cast<std::uint8_t>(x1 >> i));
    return out;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data) {
    VarintResult n = varint_decode(data);
    std::size_t pos = n.consumed;
    if (n.value % 8 != 0)
        throw corrupt_stream("arith: bit count not a whole number of bytes");
    std::vector<std::uint8_t> out;
    if (n.value == 0) {
        if (pos != data.size())
            throw corrupt_stream("arith: trailing data at byte " + std::to_string(pos));
        return out;
    }
    auto next_byte = [&]() -> std::uint32_t {
        if (pos >= data.size())
            throw corrupt_stream("arith: truncated payload at byte " + std::to_string(pos));
        return data[pos++];
    };
    Model model;
    std::uint32_t x1 = 0, x2 = 0xFFFFFFFFu, x = 0;
    for (int i = 0; i < 4; ++i)
        x = (x << 8) | next_byte();
    out.reserve(n.value / 8);
    std::uint8_t acc = 0;
    for (std::uint64_t i = 0; i < n.value; ++i) {
        std::uint32_t xmid = split(x1, x2, model.p1());
        bool bit = x <= xmid;
        if (bit)
            x2 = xmid;
        else
            x1 = xmid + 1;
        model.update(bit);
        while (((x1 ^ x2) & 0xFF000000u) == 0) {
            x1 <<= 8;
            x2 = (x2 << 8) | 0xFF;
            x = (x << 8) | next_byte();
        }
        acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
        if ((i & 7) == 7) {
            out.push_back(acc);
            acc = 0;
        }
    }
    if (pos != data.size())
        throw corrupt_stream("arith: trailing data at byte " + std::to_string(pos));
    return out;
}

} // namespace bama::arith
