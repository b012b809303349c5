#include "bama/corpus.hpp"

#include <fstream>
#include <random>

#include "bama/errors.hpp"

namespace bama {

namespace {

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const CorpusSpec& spec) {
    if (spec.length_bits < 1 && spec.kind != CorpusKind::file)
        throw config_error("corpus length must be at least 1 bit");
    if (spec.p_one < 0.0 || spec.p_one > 1.0)
        throw config_error("p_one must lie in [0, 1]");
    if (spec.kind != CorpusKind::ap_rich && !spec.components.empty())
        throw config_error("components apply only to an ap_rich corpus");
    if (spec.kind != CorpusKind::file && !spec.path.empty())
        throw config_error("path applies only to a file corpus");
    if (spec.kind == CorpusKind::file && spec.path.empty())
        throw config_error("a file corpus needs a path");
    for (const ApComponent& c : spec.components) {
        if (c.start < 0 || c.step < 1 || c.count < 1)
            throw config_error("component needs start >= 0, step >= 1, count >= 1");
        if (c.jitter_p < 0.0 || c.jitter_p > 1.0)
            throw config_error("jitter_p must lie in [0, 1]");
    }
}

BitVector read_file_bits(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw config_error("cannot read " + path);
    return BitVector::from_bytes(bytes, bytes.size() * 8);
}

} // namespace

BitVector generate_corpus(const CorpusSpec& spec) {
    validate(spec);
    if (spec.kind == CorpusKind::file)
        return read_file_bits(spec.path);

    std::mt19937_64 rng(spec.seed);
    BitVector bits(spec.length_bits);
    const std::uint64_t n = spec.length_bits;
    for (const ApComponent& c : spec.components) {
        std::uint64_t pos = static_cast<std::uint64_t>(c.start);
        for (std::int64_t k = 0; k < c.count && pos < n;
             ++k, pos += static_cast<std::uint64_t>(c.step)) {
            if (u01(rng) >= c.jitter_p)
                bits.set(static_cast<std::size_t>(pos), true);
        }
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        if (u01(rng) < spec.p_one)
            bits.set(static_cast<std::size_t>(i), true);
    }
    return bits;
}

} // namespace bama
