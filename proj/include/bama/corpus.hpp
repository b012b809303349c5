#ifndef BAMA_CORPUS_HPP
#define BAMA_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bama/bits.hpp"

namespace bama {

enum class CorpusKind : std::uint8_t { bernoulli, ap_rich, file };

// One planted arithmetic progression: ones at start + k*step for k < count,
// each position independently dropped with probability jitter_p.
struct ApComponent {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::int64_t count = 0;
    double jitter_p = 0.0;
};

struct CorpusSpec {
    CorpusKind kind = CorpusKind::bernoulli;
    std::size_t length_bits = std::size_t{1} << 20;
    double p_one = 0.5;                    // background 1 density
    std::vector<ApComponent> components;   // ap_rich only
    std::uint64_t seed = 0;
    std::string path;                      // file only
};

// Deterministic: a fixed spec yields byte-identical output on every platform.
// The PRNG is mt19937_64; uniform doubles are derived by hand (top 53 bits
// over 2^53) because the standard distributions are implementation defined.
// Draw order: each component's in-range positions in k order take one draw
// for the jitter decision (out-of-range positions take none), then the noise
// pass takes one draw per stream position.
BitVector generate_corpus(const CorpusSpec& spec);

} // namespace bama

#endif // BAMA_CORPUS_HPP
