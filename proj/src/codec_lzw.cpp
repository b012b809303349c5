#include "bama/codec.hpp"
#include "bama/errors.hpp"

#include <bit>
#include <unordered_map>

// LZW, 12-bit dictionary cap, reset on overflow.
//   codes 0..255   single bytes (always defined)
//   code  256      CLEAR: reset the dictionary
//   code  257      END: end of stream
//   codes 258..    phrases, added one per emitted code
// Codes are packed MSB-first at 9..12 bits. The width is a pure function of
// the table size: the encoder emits at bitlen(size-1), and because the decoder
// trails the encoder by exactly one entry it reads at bitlen(size) of its own
// table; both land on the same width at every step. The encoder bumps its
// count once after the final phrase flush so the END code stays aligned with
// the decoder's last add. When the table hits 4096 the encoder emits CLEAR
// and both sides start over at 258.

namespace bama::lzw {

namespace {

constexpr std::uint32_t kClear = 256;
constexpr std::uint32_t kEnd = 257;
constexpr std::uint32_t kFirstFree = 258;
constexpr std::uint32_t kTableMax = 4096;

int width_for(std::uint32_t n) {
    int w = std::bit_width(n);
    return w < 9 ? 9 : (w > 12 ? 12 : w);
}

class BitWriter {
public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}
    void put(std::uint32_t value, int bits) {
        for (int i = bits - 1; i >= 0; --i) {
            acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((value >> i) & 1u));
            if (++fill_ == 8) {
                out_.push_back(acc_);
                acc_ = 0;
                fill_ = 0;
            }
        }
    }
    void pad() {
        if (fill_ > 0) {
            out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - fill_)));
            acc_ = 0;
            fill_ = 0;
        }
    }

private:
    std::vector<std::uint8_t>& out_;
    std::uint8_t acc_ = 0;
    int fill_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}
    std::uint32_t get(int bits) {
        std::uint32_t v = 0;
        for (int i = 0; i < bits; ++i) {
            if (pos_ >= data_.size() * 8)
                throw corrupt_stream("lzw: truncated code at byte " + std::to_string(pos_ / 8));
            std::uint32_t bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
            v = (v << 1) | bit;
            ++pos_;
        }
        return v;
    }
    // After END: only zero padding in the current byte, nothing after it.
    void expect_clean_tail() const {
        if (pos_ % 8 != 0) {
            std::uint8_t rest = static_cast<std::uint8_t>(data_[pos_ / 8] << (pos_ % 8));
            if (rest)
                throw corrupt_stream("lzw: nonzero padding at byte " + std::to_string(pos_ / 8));
        }
        if ((pos_ + 7) / 8 != data_.size())
            throw corrupt_stream("lzw: trailing data at byte " + std::to_string((pos_ + 7) / 8));
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    BitWriter w(out);
    std::unordered_map<std::uint32_t, std::uint32_t> dict; // (prefix<<8)|byte -> code
    dict.reserve(kTableMax);
    std::uint32_t table = kFirstFree;
    auto emit = [&](std::uint32_t code) { w.put(code, width_for(table - 1)); };

    bool have_cur = false;
    std::uint32_t cur = 0;
    for (std::uint8_t c : data) {
        if (!have_cur) {
            cur = c;
            have_cur = true;
            continue;
        }
        std::uint32_t key = (cur << 8) | c;
        auto it = dict.find(key);
        if (it != dict.end()) {
            cur = it->second;
            continue;
        }
        emit(cur);
        dict.emplace(key, table++);
        if (table == kTableMax) {
            emit(kClear);
            dict.clear();
            table = kFirstFree;
        }
        cur = c;
    }
    if (have_cur) {
        emit(cur);
        ++table; // mirrors the decoder's add after its final phrase read
    }
    emit(kEnd);
    w.pad();
    return out;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    BitReader r(data);
    std::vector<std::uint32_t> prefix(kTableMax, 0);
    std::vector<std::uint8_t> suffix(kTableMax, 0);
    std::uint32_t table = kFirstFree;
    bool have_prev = false;
    std::uint32_t prev = 0;
    std::uint8_t prev_first = 0;
    std::vector<std::uint8_t> buf;

    auto expand = [&](std::uint32_t code) -> std::uint8_t {
        buf.clear();
        while (code >= kFirstFree) {
            buf.push_back(suffix[code]);
            code = prefix[code];
        }
        std::uint8_t first = static_cast<std::uint8_t>(code);
        out.push_back(first);
        for (auto it = buf.rbegin(); it != buf.rend(); ++it)
            out.push_back(*it);
        return first;
    };

    for (;;) {
        std::uint32_t code = r.get(width_for(table));
        if (code == kEnd)
            break;
        if (code == kClear) {
            table = kFirstFree;
            have_prev = false;
            continue;
        }
        if (!have_prev) {
            if (code > 255)
                throw corrupt_stream("lzw: non-literal code " + std::to_string(code) +
                                     " opens a dictionary epoch");
            prev = code;
            prev_first = static_cast<std::uint8_t>(code);
            out.push_back(prev_first);
            have_prev = true;
            continue;
        }
        if (code > table)
            throw corrupt_stream("lzw: dictionary index " + std::to_string(code) +
                                 " out of range (table size " + std::to_string(table) + ")");
        if (table == kTableMax)
            throw corrupt_stream("lzw: dictionary overflow without reset");
        std::uint8_t first;
        if (code == table) {
            // The phrase being defined right now: prev + first char of prev.
            prefix[table] = prev;
            suffix[table] = prev_first;
            ++table;
            first = expand(code);
        } else {
            first = expand(code);
            prefix[table] = prev;
            suffix[table] = first;
            ++table;
        }
        prev = code;
        prev_first = first;
    }
    r.expect_clean_tail();
    return out;
}

} // namespace bama::lzw
