#ifndef BAMA_PIPELINE_HPP
#define BAMA_PIPELINE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bama/bits.hpp"
#include "bama/catalyst.hpp"
#include "bama/codec.hpp"
#include "bama/metrics.hpp"

namespace bama {

// Container layout, integers as varints:
//   "BAMA"  magic
//   0x01    format version
//   flags   bit 0 mode, bits 1-3 codec id, bits 4-7 reserved zero
//   varint  block size in bits
//   varint  total stream bits
//   varint  byte length of the coded payload
//   bytes   codec(every block's side info, then the packed residual stream)
// Side info per block: varint run count, then count/start/step varints per
// run in extraction order. The residual stream is the concatenation of all
// block residuals, packed most significant bit first, final byte zero padded.

struct PipelineParams {
    std::size_t block_size = 1024; // bits per block
    CatalystParams catalyst;
};

std::vector<CatalyzedBlock> catalyze_stream(const BitVector& stream, Mode mode,
                                            const PipelineParams& params);

std::vector<std::uint8_t> block_side_info(const CatalyzedBlock& block);

// Payload plaintext: side info for every block, then the packed residual.
std::vector<std::uint8_t> build_payload(std::span<const CatalyzedBlock> blocks);

std::vector<std::uint8_t> compress(const BitVector& stream, Mode mode, Codec codec,
                                   const PipelineParams& params);

// Exact inverse of compress. Throws unsupported_format on a foreign magic or
// version, corrupt_stream on anything structurally wrong inside.
BitVector decompress(std::span<const std::uint8_t> container);

// One input measured three ways with the same codec: a container with the
// catalyst disabled, then one per mode. Each mode's ccfpb compares the codec's
// cost on every captured block against its cost on that block's side info
// plus residual; the catalyst-off report carries no per-block figures.
struct ComparisonReport {
    Codec codec = Codec::none;
    MetricsReport coder_alone;
    MetricsReport mode1;
    MetricsReport mode2;
};

ComparisonReport run_comparison(const BitVector& stream, Codec codec,
                                const PipelineParams& params);

} // namespace bama

#endif // BAMA_PIPELINE_HPP
