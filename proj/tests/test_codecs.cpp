#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bama/codec.hpp"
#include "bama/errors.hpp"

using bama::Codec;
using bytes = std::vector<std::uint8_t>;

namespace {

const std::array<Codec, 5> kAll{Codec::none, Codec::rle, Codec::lzw, Codec::huffman,
                                Codec::arithmetic};

bytes from_str(const char* s) {
    return bytes(s, s + std::string(s).size());
}

bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
    bytes out(n);
    for (auto& b : out)
        b = static_cast<std::uint8_t>(rng());
    return out;
}

bytes skewed_bytes(std::mt19937_64& rng, std::size_t n, double p_zero) {
    bytes out(n);
    for (auto& b : out) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        b = u < p_zero ? 0 : static_cast<std::uint8_t>(rng());
    }
    return out;
}

bytes packed_bernoulli(std::mt19937_64& rng, std::size_t n, double p_one) {
    bytes out(n, 0);
    for (std::size_t i = 0; i < n * 8; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p_one)
            out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return out;
}

bytes small_alphabet(std::mt19937_64& rng, std::size_t n, int k) {
    bytes out(n);
    for (auto& b : out)
        b = static_cast<std::uint8_t>('a' + rng() % static_cast<std::uint64_t>(k));
    return out;
}

void check_roundtrip(Codec c, const bytes& data) {
    bytes coded = bama::codec_encode(c, data);
    bytes back = bama::codec_decode(c, coded);
    REQUIRE(back == data);
    CHECK(bama::coded_size_bits(c, data) == coded.size() * 8);
}

double order0_entropy_bits(const bytes& data) {
    std::array<std::uint64_t, 256> freq{};
    for (std::uint8_t b : data)
        ++freq[b];
    double h = 0.0;
    for (std::uint64_t f : freq) {
        if (f == 0)
            continue;
        double p = static_cast<double>(f) / static_cast<double>(data.size());
        h -= p * std::log2(p);
    }
    return h;
}

} // namespace

TEST_CASE("every codec roundtrips every input family") {
    std::mt19937_64 rng(101);
    std::vector<bytes> corpus;
    corpus.push_back({});
    for (std::uint8_t b : {0x00, 0x41, 0xFF})
        corpus.push_back(bytes{b});
    for (std::size_t n : {2u, 3u, 127u, 128u, 300u})
        corpus.push_back(bytes(n, 0x5A));
    corpus.push_back(from_str("TOBEORNOTTOBEORTOBEORNOT"));
    corpus.push_back(from_str("ABABABABABABABA")); // phrase-defined-right-now path
    for (int i = 0; i < 125; ++i)
        corpus.push_back(random_bytes(rng, 1 + rng() % 2048));
    for (int i = 0; i < 125; ++i)
        corpus.push_back(skewed_bytes(rng, 1 + rng() % 2048, 0.85));
    for (int i = 0; i < 125; ++i)
        corpus.push_back(packed_bernoulli(rng, 1 + rng() % 1024, 0.03));
    for (int i = 0; i < 125; ++i)
        corpus.push_back(small_alphabet(rng, 1 + rng() % 2048, 2 + static_cast<int>(rng() % 6)));

    for (Codec c : kAll)
        for (const bytes& data : corpus)
            check_roundtrip(c, data);
}

TEST_CASE("none stores the input verbatim") {
    std::mt19937_64 rng(102);
    bytes data = random_bytes(rng, 1000);
    CHECK(bama::codec_encode(Codec::none, data) == data);
    CHECK(bama::codec_decode(Codec::none, data) == data);
}

TEST_CASE("codec names map both ways") {
    CHECK(std::string(bama::codec_name(Codec::none)) == "none");
    CHECK(std::string(bama::codec_name(Codec::rle)) == "rle");
    CHECK(std::string(bama::codec_name(Codec::lzw)) == "lzw");
    CHECK(std::string(bama::codec_name(Codec::huffman)) == "huffman");
    CHECK(std::string(bama::codec_name(Codec::arithmetic)) == "arith");
    for (Codec c : kAll)
        CHECK(bama::codec_from_name(bama::codec_name(c)) == c);
    CHECK_THROWS_AS(bama::codec_from_name("zstd"), bama::config_error);
    CHECK_THROWS_AS(bama::codec_from_name(""), bama::config_error);
}

TEST_CASE("rle packet layout") {
    CHECK(bama::rle::encode(bytes(6, 'A')) == bytes{0x86, 'A'});
    CHECK(bama::rle::encode(from_str("ABC")) == bytes{0x03, 'A', 'B', 'C'});
    CHECK(bama::rle::encode(from_str("AAB")) == bytes{0x03, 'A', 'A', 'B'}); // run of 2 stays literal
    CHECK(bama::rle::encode(bytes(3, 'X')) == bytes{0x83, 'X'});
    CHECK(bama::rle::encode(bytes(300, 'Z')) == bytes{0xFF, 'Z', 0xFF, 'Z', 0xAE, 'Z'});
    CHECK(bama::rle::encode(from_str("XYAAAA")) == bytes{0x02, 'X', 'Y', 0x84, 'A'});
    CHECK(bama::rle::encode({}).empty());
}

TEST_CASE("rle squeezes a zero block to its packet floor") {
    bytes zeros(std::size_t{1} << 17, 0x00);
    bytes coded = bama::rle::encode(zeros);
    // 1032 full packets of 127 plus one packet of 8, two bytes each
    CHECK(coded.size() == 2066);
    CHECK(static_cast<double>(coded.size()) <
          0.02 * static_cast<double>(zeros.size()));
    CHECK(bama::rle::decode(coded) == zeros);
}

TEST_CASE("rle rejects malformed packets") {
    CHECK_THROWS_AS(bama::rle::decode(bytes{0x00}), bama::corrupt_stream);
    CHECK_THROWS_AS(bama::rle::decode(bytes{0x80}), bama::corrupt_stream);
    CHECK_THROWS_AS(bama::rle::decode(bytes{0x05, 'A'}), bama::corrupt_stream);
    CHECK_THROWS_AS(bama::rle::decode(bytes{0x83}), bama::corrupt_stream);
    CHECK_THROWS_AS(bama::rle::decode(bytes{0x02, 'A', 'B', 0x00}), bama::corrupt_stream);
}

TEST_CASE("lzw survives dictionary resets and long phrases") {
    std::mt19937_64 rng(103);
    // random input defines ~one phrase per emit, forcing several resets
    bytes noisy = random_bytes(rng, 150000);
    CHECK(bama::lzw::decode(bama::lzw::encode(noisy)) == noisy);

    bytes alternating;
    for (int i = 0; i < 100000; ++i)
        alternating.push_back(i % 2 ? 'B' : 'A');
    CHECK(bama::lzw::decode(bama::lzw::encode(alternating)) == alternating);

    bytes dictionary_friendly;
    bytes chunk = random_bytes(rng, 50);
    for (int i = 0; i < 1000; ++i)
        dictionary_friendly.insert(dictionary_friendly.end(), chunk.begin(), chunk.end());
    CHECK(bama::lzw::decode(bama::lzw::encode(dictionary_friendly)) == dictionary_friendly);
    // repeated content actually compresses
    CHECK(bama::lzw::encode(dictionary_friendly).size() < dictionary_friendly.size() / 2);
}

TEST_CASE("lzw rejects malformed streams") {
    // 9-bit code 258 with an empty dictionary
    CHECK_THROWS_AS(bama::lzw::decode(bytes{0x81, 0x00}), bama::corrupt_stream);
    // literal 'A' then code 300 against a table of 258
    CHECK_THROWS_AS(bama::lzw::decode(bytes{0x20, 0xCB, 0x00}), bama::corrupt_stream);
    // truncated mid-code
    CHECK_THROWS_AS(bama::lzw::decode(bytes{0x80}), bama::corrupt_stream);
    bytes ok = bama::lzw::encode(from_str("A"));
    bytes pad = ok;
    pad.back() |= 0x01; // the tail padding must stay zero
    CHECK_THROWS_AS(bama::lzw::decode(pad), bama::corrupt_stream);
    bytes trail = ok;
    trail.push_back(0x00);
    CHECK_THROWS_AS(bama::lzw::decode(trail), bama::corrupt_stream);
}

TEST_CASE("huffman code lengths match the textbook splits") {
    // p = 1/2, 1/4, 1/4
    bytes data = from_str("AABC");
    std::vector<int> len = bama::huffman::code_lengths(data);
    CHECK(len['A'] == 1);
    CHECK(len['B'] == 2);
    CHECK(len['C'] == 2);
    for (int s = 0; s < 256; ++s)
        if (s != 'A' && s != 'B' && s != 'C')
            CHECK(len[s] == 0);

    // equal weights break ties toward the smallest symbol, deterministically
    std::vector<int> abc = bama::huffman::code_lengths(from_str("ABC"));
    CHECK(abc['A'] == 2);
    CHECK(abc['B'] == 2);
    CHECK(abc['C'] == 1);

    // a single distinct symbol still gets a one-bit code
    std::vector<int> one = bama::huffman::code_lengths(bytes(40, 'Q'));
    CHECK(one['Q'] == 1);
}

TEST_CASE("huffman lengths satisfy Kraft with equality") {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 200; ++trial) {
        bytes data = small_alphabet(rng, 40 + rng() % 400, 2 + static_cast<int>(rng() % 12));
        std::vector<int> len = bama::huffman::code_lengths(data);
        std::uint64_t sum = 0;
        int present = 0;
        for (int s = 0; s < 256; ++s) {
            if (len[s] == 0)
                continue;
            ++present;
            REQUIRE(len[s] <= 63);
            sum += std::uint64_t{1} << (63 - len[s]);
        }
        if (present >= 2)
            CHECK(sum == (std::uint64_t{1} << 63)); // a full binary tree, no slack
    }
}

TEST_CASE("huffman beats every other prefix code on small alphabets") {
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3); // 2..4 symbols
        std::vector<std::uint64_t> freq(static_cast<std::size_t>(k));
        bytes data;
        for (int s = 0; s < k; ++s) {
            freq[static_cast<std::size_t>(s)] = 1 + rng() % 40;
            data.insert(data.end(), freq[static_cast<std::size_t>(s)],
                        static_cast<std::uint8_t>('a' + s));
        }
        std::vector<int> len = bama::huffman::code_lengths(data);
        std::uint64_t cost = 0;
        for (int s = 0; s < k; ++s)
            cost += freq[static_cast<std::size_t>(s)] *
                    static_cast<std::uint64_t>(len[static_cast<std::size_t>('a' + s)]);

        // brute force every feasible length assignment (Kraft sum <= 1)
        std::uint64_t best = ~std::uint64_t{0};
        std::vector<int> pick(static_cast<std::size_t>(k), 1);
        for (;;) {
            std::uint64_t kraft = 0, c = 0;
            for (int s = 0; s < k; ++s) {
                kraft += std::uint64_t{1} << (16 - pick[static_cast<std::size_t>(s)]);
                c += freq[static_cast<std::size_t>(s)] *
                     static_cast<std::uint64_t>(pick[static_cast<std::size_t>(s)]);
            }
            if (kraft <= (std::uint64_t{1} << 16))
                best = std::min(best, c);
            int i = 0;
            while (i < k && ++pick[static_cast<std::size_t>(i)] > 8) {
                pick[static_cast<std::size_t>(i)] = 1;
                ++i;
            }
            if (i == k)
                break;
        }
        CHECK(cost == best);
    }
}

TEST_CASE("huffman output stays within a bit per symbol of the entropy") {
    std::mt19937_64 rng(106);
    for (double p_zero : {0.5, 0.8, 0.95}) {
        bytes data = skewed_bytes(rng, 65536, p_zero);
        double h = order0_entropy_bits(data);
        double payload_bound = std::ceil((h + 1.0) * static_cast<double>(data.size()) / 8.0);
        bytes coded = bama::huffman::encode(data);
        CHECK(static_cast<double>(coded.size()) <= payload_bound + 522.0);
    }
}

TEST_CASE("huffman rejects malformed containers") {
    // byte count 0 followed by junk
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x00, 0xFF}), bama::corrupt_stream);
    // count 5 but the table is missing
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x05}), bama::corrupt_stream);
    // zero-length run in the table
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x01, 0x08, 0x00}), bama::corrupt_stream);
    // runs walk past the 256 slots
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x01, 0x01, 0xFF, 0x01, 0xFF}),
                    bama::corrupt_stream);
    // three symbols of length 1 overfill the code space
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x01, 0x01, 0x03, 0x00, 0xFD}),
                    bama::corrupt_stream);
    // all lengths zero yet one symbol is promised
    CHECK_THROWS_AS(bama::huffman::decode(bytes{0x01, 0x00, 0xFF, 0x00, 0x01}),
                    bama::corrupt_stream);

    bytes ok = bama::huffman::encode(bytes(5, 'A'));
    bytes cut(ok.begin(), ok.end() - 1);
    CHECK_THROWS_AS(bama::huffman::decode(cut), bama::corrupt_stream);
    bytes pad = ok;
    pad.back() |= 0x01;
    CHECK_THROWS_AS(bama::huffman::decode(pad), bama::corrupt_stream);
    bytes trail = ok;
    trail.push_back(0x00);
    CHECK_THROWS_AS(bama::huffman::decode(trail), bama::corrupt_stream);
}

TEST_CASE("arithmetic coder adapts to skewed bits") {
    std::mt19937_64 rng(107);
    bytes data = skewed_bytes(rng, 65536, 0.9);
    bytes coded = bama::arith::encode(data);
    CHECK(static_cast<double>(coded.size()) < 0.5 * static_cast<double>(data.size()));
    CHECK(bama::arith::decode(coded) == data);
}

TEST_CASE("arithmetic output stays near the huffman size on sparse data") {
    std::mt19937_64 rng(108);
    bytes data = packed_bernoulli(rng, 65536, 0.024);
    bytes a = bama::arith::encode(data);
    bytes h = bama::huffman::encode(data);
    CHECK(a.size() <= h.size() + 64);
}

TEST_CASE("arithmetic coder rejects malformed containers") {
    // bit count that is not a whole number of bytes
    CHECK_THROWS_AS(bama::arith::decode(bytes{0x03}), bama::corrupt_stream);
    // empty payload with trailing junk
    CHECK_THROWS_AS(bama::arith::decode(bytes{0x00, 0xFF}), bama::corrupt_stream);
    // eight bits promised, no renormalization bytes at all
    CHECK_THROWS_AS(bama::arith::decode(bytes{0x08}), bama::corrupt_stream);

    std::mt19937_64 rng(109);
    bytes ok = bama::arith::encode(random_bytes(rng, 100));
    bytes cut(ok.begin(), ok.end() - 1);
    CHECK_THROWS_AS(bama::arith::decode(cut), bama::corrupt_stream);
    bytes trail = ok;
    trail.push_back(0x00);
    CHECK_THROWS_AS(bama::arith::decode(trail), bama::corrupt_stream);
}

TEST_CASE("no codec shrinks incompressible data materially") {
    std::mt19937_64 rng(110);
    bytes data = random_bytes(rng, std::size_t{1} << 20);
    for (Codec c : kAll) {
        bytes coded = bama::codec_encode(c, data);
        CHECK(coded.size() + 64 >= data.size());
    }
}

TEST_CASE("encoding is deterministic") {
    std::mt19937_64 rng(111);
    bytes data = skewed_bytes(rng, 4096, 0.7);
    for (Codec c : kAll)
        CHECK(bama::codec_encode(c, data) == bama::codec_encode(c, data));
}
