#include "bama/codec.hpp"
#include "bama/errors.hpp"
#include "bama/varint.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <queue>

// Static order-0 byte Huffman with a canonical code.
//   varint  original byte count N (nothing else follows when N == 0)
//   table   the 256 code lengths, run-length packed as (length, run) byte
//           pairs; runs cap at 255 and the pairs must cover exactly 256 slots
//   payload canonical codewords packed MSB-first, zero-padded to a byte
// Canonical assignment: symbols sorted by (length, value) take consecutive
// codes from the all-zeros codeword up. A single-symbol input gets length 1.
// Ties in the tree build pop oldest-first so the table is deterministic.

namespace bama::huffman {

namespace {

constexpr int kMaxLen = 63;

std::array<std::uint64_t, 256> histogram(std::span<const std::uint8_t> data) {
    std::array<std::uint64_t, 256> freq{};
    for (std::uint8_t b : data)
        ++freq[b];
    return freq;
}

std::vector<int> lengths_from_histogram(const std::array<std::uint64_t, 256>& freq) {
    std::vector<int> len(256, 0);
    struct Node {
        std::uint64_t weight;
        std::uint32_t seq;
        int left, right, symbol;
    };
    std::vector<Node> nodes;
    using Key = std::pair<std::uint64_t, std::uint32_t>;
    std::priority_queue<std::pair<Key, int>, std::vector<std::pair<Key, int>>, std::greater<>> heap;
    for (int s = 0; s < 256; ++s) {
        if (freq[s] == 0)
            continue;
        nodes.push_back(Node{freq[s], static_cast<std::uint32_t>(s), -1, -1, s});
        heap.push({{freq[s], static_cast<std::uint32_t>(s)}, static_cast<int>(nodes.size()) - 1});
    }
    if (nodes.empty())
        return len;
    if (nodes.size() == 1) {
        len[nodes[0].symbol] = 1;
        return len;
    }
    std::uint32_t seq = 256;
    while (heap.size() > 1) {
        auto [ka, a] = heap.top();
        heap.pop();
        auto [kb, b] = heap.top();
        heap.pop();
        nodes.push_back(Node{ka.first + kb.first, seq, a, b, -1});
        heap.push({{ka.first + kb.first, seq}, static_cast<int>(nodes.size()) - 1});
        ++seq;
    }
    // Depth-first walk assigns lengths.
    std::vector<std::pair<int, int>> stack{{heap.top().second, 0}};
    while (!stack.empty()) {
        auto [i, depth] = stack.back();
        stack.pop_back();
        if (nodes[i].symbol >= 0) {
            assert(depth <= kMaxLen);
            len[nodes[i].symbol] = depth;
        } else {
            stack.push_back({nodes[i].left, depth + 1});
            stack.push_back({nodes[i].right, depth + 1});
        }
    }
    return len;
}

struct Canonical {
    // Symbols sorted by (length, value); per-length first code and start index.
    std::vector<std::uint8_t> symbols;
    std::array<std::uint32_t, kMaxLen + 1> count{};
    std::array<std::uint64_t, kMaxLen + 1> first_code{};
    std::array<std::uint32_t, kMaxLen + 1> first_index{};
    int max_len = 0;
};

Canonical canonicalize(const std::vector<int>& len) {
    Canonical c;
    for (int s = 0; s < 256; ++s) {
        if (len[s] < 0 || len[s] > kMaxLen)
            throw corrupt_stream("huffman: invalid code length");
        if (len[s] > 0) {
            ++c.count[static_cast<std::size_t>(len[s])];
            c.max_len = std::max(c.max_len, len[s]);
        }
    }
    std::uint64_t code = 0;
    std::uint32_t index = 0;
    for (int l = 1; l <= c.max_len; ++l) {
        c.first_code[static_cast<std::size_t>(l)] = code;
        c.first_index[static_cast<std::size_t>(l)] = index;
        std::uint64_t limit = std::uint64_t{1} << l;
        if (code + c.count[static_cast<std::size_t>(l)] > limit)
            throw corrupt_stream("huffman: code lengths exceed the code space");
        code = (code + c.count[static_cast<std::size_t>(l)]) << 1;
        index += c.count[static_cast<std::size_t>(l)];
    }
    c.symbols.reserve(index);
    for (int l = 1; l <= c.max_len; ++l)
        for (int s = 0; s < 256; ++s)
            if (len[s] == l)
                c.symbols.push_back(static_cast<std::uint8_t>(s));
    return c;
}

void append_table(const std::vector<int>& len, std::vector<std::uint8_t>& out) {
    int i = 0;
    while (i < 256) {
        int j = i;
        while (j < 256 && len[j] == len[i] && j - i < 255)
            ++j;
        out.push_back(static_cast<std::uint8_t>(len[i]));
        out.push_back(static_cast<std::uint8_t>(j - i));
        i = j;
    }
}

} // namespace

std::vector<int> code_lengths(std::span<const std::uint8_t> data) {
    return lengths_from_histogram(histogram(data));
}

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    varint_append(data.size(), out);
    if (data.empty())
        return out;
    std::vector<int> len = lengths_from_histogram(histogram(data));
    append_table(len, out);
    Canonical c = canonicalize(len);
    // Codeword per symbol, rebuilt from the canonical tables.
    std::array<std::uint64_t, 256> code{};
    std::array<int, 256> bits{};
    for (std::uint32_t i = 0; i < c.symbols.size(); ++i) {
        std::uint8_t s = c.symbols[i];
        int l = len[s];
        code[s] = c.first_code[static_cast<std::size_t>(l)] +
                  (i - c.first_index[static_cast<std::size_t>(l)]);
        bits[s] = l;
    }
    std::uint8_t acc = 0;
    int fill = 0;
    for (std::uint8_t b : data) {
        for (int i = bits[b] - 1; i >= 0; --i) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((code[b] >> i) & 1u));
            if (++fill == 8) {
                out.push_back(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if (fill > 0)
        out.push_back(static_cast<std::uint8_t>(acc << (8 - fill)));
    return out;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> data) {
    VarintResult n = varint_decode(data);
    std::size_t pos = n.consumed;
    std::vector<std::uint8_t> out;
    if (n.value == 0) {
        if (pos != data.size())
            throw corrupt_stream("huffman: trailing data at byte " + std::to_string(pos));
        return out;
    }
    std::vector<int> len(256, 0);
    int covered = 0;
    while (covered < 256) {
        if (pos + 2 > data.size())
            throw corrupt_stream("huffman: truncated length table at byte " + std::to_string(pos));
        int l = data[pos];
        int run = data[pos + 1];
        pos += 2;
        if (run == 0 || covered + run > 256 || l > kMaxLen)
            throw corrupt_stream("huffman: bad length table entry at byte " +
                                 std::to_string(pos - 2));
        for (int k = 0; k < run; ++k)
            len[covered + k] = l;
        covered += run;
    }
    Canonical c = canonicalize(len);
    if (c.symbols.empty())
        throw corrupt_stream("huffman: empty code for nonempty payload");

    out.reserve(n.value);
    std::size_t bitpos = pos * 8;
    const std::size_t bitend = data.size() * 8;
    for (std::uint64_t i = 0; i < n.value; ++i) {
        std::uint64_t acc = 0;
        int l = 0;
        for (;;) {
            if (bitpos >= bitend)
                throw corrupt_stream("huffman: truncated payload at byte " +
                                     std::to_string(bitpos / 8));
            acc = (acc << 1) | ((data[bitpos / 8] >> (7 - bitpos % 8)) & 1u);
            ++bitpos;
            if (++l > c.max_len)
                throw corrupt_stream("huffman: invalid code at byte " +
                                     std::to_string(bitpos / 8));
            std::uint32_t cnt = c.count[static_cast<std::size_t>(l)];
            if (cnt && acc >= c.first_code[static_cast<std::size_t>(l)] &&
                acc - c.first_code[static_cast<std::size_t>(l)] < cnt) {
                out.push_back(
                    c.symbols[c.first_index[static_cast<std::size_t>(l)] +
                              static_cast<std::uint32_t>(
                                  acc - c.first_code[static_cast<std::size_t>(l)])]);
                break;
            }
        }
    }
    if (bitpos % 8 != 0) {
        std::uint8_t rest = static_cast<std::uint8_t>(data[bitpos / 8] << (bitpos % 8));
        if (rest)
            throw corrupt_stream("huffman: nonzero padding at byte " + std::to_string(bitpos / 8));
    }
    if ((bitpos + 7) / 8 != data.size())
        throw corrupt_stream("huffman: trailing data at byte " + std::to_string((bitpos + 7) / 8));
    return out;
}

} // namespace bama::huffman
