#include "bama/codec.hpp"
#include "bama/errors.hpp"

// Packet RLE with 7-bit lengths.
//   control 0x01..0x7F: literal run, that many raw bytes follow
//   control 0x81..0xFF: repeat run of (control & 0x7F) copies of the next byte
//   control 0x00 and 0x80 are invalid
// Runs of three or more identical bytes become repeat packets; anything
// shorter rides in literal packets. Both run kinds cap at 127 per packet.

namespace bama::rle {

namespace {
constexpr std::size_t kMaxRun = 127;
}

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    std::size_t lit_start = 0, lit_len = 0;
    auto flush_literals = [&] {
        while (lit_len > 0) {
            std::size_t n = std::min(lit_len, kMaxRun);
            out.push_back(static_cast<std::uint8_t>(n));
            out.insert(out.end(), data.begin() + static_cast<std::ptrdiff_t>(lit_start),
                       data.begin() + static_cast<std::ptrdiff_t>(lit_start + n));
            lit_start += n;
            lit_len -= n;
        }
    };
    std::size_t i = 0;
    while (i < data.size()) {
        std::size_t run = 1;
        while (i + run < data.size() && data[i + run] == data[i])
            ++run;
        if (run >= 3) {
            flush_literals();
            std::size_t left = run;
            while (left > 0) {
                std::size_t n = std::min(left, kMaxRun);
                out.push_back(static_cast<std::uint8_t>(0x80 | n));
                out.push_back(data[i]);
                left -= n;
            }
        } else {
            if (lit_len == 0)
                lit_start = i;
            lit_len += run;
        }
        i += run;
    }
    flush_literals();
    return out;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    std::size_t i = 0;
    while (i < data.size()) {
        std::uint8_t ctrl = data[i++];
        std::size_t n = ctrl & 0x7F;
        if (n == 0)
            throw corrupt_stream("rle: zero-length packet at byte " + std::to_string(i - 1));
        if (ctrl & 0x80) {
            if (i >= data.size())
                throw corrupt_stream("rle: truncated repeat packet at byte " + std::to_string(i));
            out.insert(out.end(), n, data[i++]);
        } else {
            if (i + n > data.size())
                throw corrupt_stream("rle: truncated literal packet at byte " + std::to_string(i));
            out.insert(out.end(), data.begin() + static_cast<std::ptrdiff_t>(i),
                       data.begin() + static_cast<std::ptrdiff_t>(i + n));
            i += n;
        }
    }
    return out;
}

} // namespace bama::rle
