#include "bama/bits.hpp"

#include <bit>

#include "bama/errors.hpp"

namespace bama {

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    assert(bit_count <= bytes.size() * 8);
    BitVector v;
    v.size_ = bit_count;
    v.data_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
    // Keep pad bits zero so equality stays a plain byte compare.
    if (bit_count & 7)
        v.data_.back() &= static_cast<std::uint8_t>(0xFF00 >> (bit_count & 7));
    return v;
}

BitVector BitVector::from_string(std::string_view zeros_and_ones) {
    BitVector v(zeros_and_ones.size());
    for (std::size_t i = 0; i < zeros_and_ones.size(); ++i) {
        assert(zeros_and_ones[i] == '0' || zeros_and_ones[i] == '1');
        if (zeros_and_ones[i] == '1')
            v.set(i, true);
    }
    return v;
}

void BitVector::push_back(bool v) {
    if ((size_ & 7) == 0)
        data_.push_back(0);
    ++size_;
    if (v)
        set(size_ - 1, true);
}

void BitVector::append(const BitVector& other) {
    if (other.size_ == 0)
        return;
    if ((size_ & 7) == 0) {
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i)
        push_back(other.get(i));
}

std::size_t BitVector::count_ones() const {
    std::size_t n = 0;
    for (std::uint8_t b : data_)
        n += static_cast<std::size_t>(std::popcount(b));
    return n;
}

std::vector<std::size_t> BitVector::one_positions() const {
    std::vector<std::size_t> out;
    out.reserve(count_ones());
    for (std::size_t byte = 0; byte < data_.size(); ++byte) {
        std::uint8_t b = data_[byte];
        while (b) {
            int lead = std::countl_zero(b);
            out.push_back(byte * 8 + static_cast<std::size_t>(lead));
            b = static_cast<std::uint8_t>(b & ~(0x80u >> lead));
        }
    }
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
    assert(begin + len <= size_);
    if ((begin & 7) == 0) {
        std::span<const std::uint8_t> tail(data_.data() + begin / 8, data_.size() - begin / 8);
        return from_bytes(tail, len);
    }
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(begin + i))
            out.set(i, true);
    return out;
}

std::vector<BitBlock> split_blocks(const BitVector& stream, std::size_t block_size) {
    assert(block_size >= 1);
    std::vector<BitBlock> blocks;
    std::size_t n = stream.size();
    blocks.reserve((n + block_size - 1) / block_size);
    for (std::size_t pos = 0, idx = 0; pos < n; pos += block_size, ++idx) {
        std::size_t len = std::min(block_size, n - pos);
        blocks.push_back(BitBlock{idx, block_size, stream.slice(pos, len)});
    }
    return blocks;
}

BitVector join_blocks(std::span<const BitBlock> blocks) {
    BitVector out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].index != i)
            throw corrupt_stream("join_blocks: non-consecutive block indices");
        out.append(blocks[i].bits);
    }
    return out;
}

} // namespace bama
