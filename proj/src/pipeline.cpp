#include "bama/pipeline.hpp"

#include <chrono>
#include <cstring>
#include <string>

#include "bama/errors.hpp"
#include "bama/varint.hpp"

namespace bama {

namespace {

constexpr std::uint8_t kMagic[4] = {'B', 'A', 'M', 'A'};
constexpr std::uint8_t kVersion = 1;

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return a / b + (a % b != 0);
}

std::vector<std::uint8_t> assemble(std::span<const CatalyzedBlock> blocks, Mode mode, Codec codec,
                                   std::uint64_t block_size, std::uint64_t total_bits) {
    std::vector<std::uint8_t> coded = codec_encode(codec, build_payload(blocks));
    std::uint8_t flags = static_cast<std::uint8_t>(mode == Mode::mode2 ? 1 : 0);
    flags |= static_cast<std::uint8_t>(static_cast<std::uint8_t>(codec) << 1);
    std::vector<std::uint8_t> out{kMagic[0], kMagic[1], kMagic[2], kMagic[3], kVersion, flags};
    out.reserve(coded.size() + 24);
    varint_append(block_size, out);
    varint_append(total_bits, out);
    varint_append(coded.size(), out);
    out.insert(out.end(), coded.begin(), coded.end());
    return out;
}

} // namespace

std::vector<CatalyzedBlock> catalyze_stream(const BitVector& stream, Mode mode,
                                            const PipelineParams& params) {
    if (params.block_size < 1)
        throw config_error("block_size must be at least 1 bit");
    std::vector<CatalyzedBlock> out;
    std::vector<BitBlock> blocks = split_blocks(stream, params.block_size);
    out.reserve(blocks.size());
    for (const BitBlock& block : blocks)
        out.push_back(catalyze_block(block, mode, params.catalyst));
    return out;
}

std::vector<std::uint8_t> block_side_info(const CatalyzedBlock& block) {
    std::vector<std::uint8_t> out;
    varint_append(block.runs.size(), out);
    for (const ApRun& run : block.runs) {
        varint_append(static_cast<std::uint64_t>(run.count), out);
        varint_append(static_cast<std::uint64_t>(run.start), out);
        varint_append(static_cast<std::uint64_t>(run.step), out);
    }
    return out;
}

std::vector<std::uint8_t> build_payload(std::span<const CatalyzedBlock> blocks) {
    std::vector<std::uint8_t> out;
    for (const CatalyzedBlock& block : blocks) {
        std::vector<std::uint8_t> info = block_side_info(block);
        out.insert(out.end(), info.begin(), info.end());
    }
    std::vector<BitBlock> residuals;
    residuals.reserve(blocks.size());
    for (const CatalyzedBlock& block : blocks)
        residuals.push_back(block.residual);
    std::vector<std::uint8_t> packed = join_blocks(residuals).pack_bytes();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

std::vector<std::uint8_t> compress(const BitVector& stream, Mode mode, Codec codec,
                                   const PipelineParams& params) {
    std::vector<CatalyzedBlock> blocks = catalyze_stream(stream, mode, params);
    return assemble(blocks, mode, codec, params.block_size, stream.size());
}

BitVector decompress(std::span<const std::uint8_t> container) {
    if (container.size() < 6)
        throw corrupt_stream("container shorter than its fixed header");
    if (std::memcmp(container.data(), kMagic, 4) != 0)
        throw unsupported_format("not a bama container");
    if (container[4] != kVersion)
        throw unsupported_format("container version " + std::to_string(container[4]) +
                                 " not supported");
    std::uint8_t flags = container[5];
    if (flags & 0xF0)
        throw corrupt_stream("reserved flag bits set");
    Mode mode = (flags & 1) ? Mode::mode2 : Mode::mode1;
    std::uint8_t codec_id = (flags >> 1) & 0x07;
    if (codec_id > 4)
        throw corrupt_stream("unknown codec id " + std::to_string(codec_id));
    Codec codec = static_cast<Codec>(codec_id);

    std::size_t pos = 6;
    VarintResult bs = varint_decode(container, pos);
    pos += bs.consumed;
    VarintResult tb = varint_decode(container, pos);
    pos += tb.consumed;
    VarintResult pl = varint_decode(container, pos);
    pos += pl.consumed;
    const std::uint64_t block_size = bs.value;
    const std::uint64_t total_bits = tb.value;
    if (block_size == 0)
        throw corrupt_stream("zero block size");
    if (static_cast<std::uint64_t>(container.size() - pos) != pl.value)
        throw corrupt_stream("payload length mismatch");

    std::vector<std::uint8_t> plain = codec_decode(codec, container.subspan(pos));

    const std::uint64_t nb = ceil_div(total_bits, block_size);
    std::size_t off = 0;
    std::vector<std::vector<ApRun>> runs_per_block;
    for (std::uint64_t i = 0; i < nb; ++i) {
        VarintResult rc = varint_decode(plain, off);
        off += rc.consumed;
        std::vector<ApRun> runs;
        for (std::uint64_t r = 0; r < rc.value; ++r) {
            VarintResult a = varint_decode(plain, off);
            off += a.consumed;
            VarintResult b = varint_decode(plain, off);
            off += b.consumed;
            VarintResult m = varint_decode(plain, off);
            off += m.consumed;
            if (a.value == 0)
                throw corrupt_stream("zero run count in side info");
            if (m.value == 0)
                throw corrupt_stream("zero step in side info");
            // 2^63 and up turn negative here; decode_block rejects those.
            runs.push_back(ApRun{static_cast<std::int64_t>(a.value),
                                 static_cast<std::int64_t>(b.value),
                                 static_cast<std::int64_t>(m.value)});
        }
        runs_per_block.push_back(std::move(runs));
    }

    const std::uint64_t residual_bytes = ceil_div(total_bits, 8);
    if (static_cast<std::uint64_t>(plain.size() - off) != residual_bytes)
        throw corrupt_stream("residual length mismatch");
    if (total_bits % 8 != 0) {
        std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFF >> (total_bits % 8));
        if (plain.back() & pad_mask)
            throw corrupt_stream("nonzero padding after residual");
    }

    BitVector residual_stream = BitVector::from_bytes(
        std::span<const std::uint8_t>(plain).subspan(off), static_cast<std::size_t>(total_bits));
    std::vector<BitBlock> residual_blocks =
        split_blocks(residual_stream, static_cast<std::size_t>(block_size));

    std::vector<BitBlock> decoded;
    decoded.reserve(residual_blocks.size());
    for (std::size_t i = 0; i < residual_blocks.size(); ++i) {
        CatalyzedBlock cb;
        cb.mode = mode;
        cb.original_length = residual_blocks[i].bits.size();
        cb.runs = std::move(runs_per_block[i]);
        cb.residual = std::move(residual_blocks[i]);
        decoded.push_back(decode_block(cb));
    }
    return join_blocks(decoded);
}

ComparisonReport run_comparison(const BitVector& stream, Codec codec,
                                const PipelineParams& params) {
    using clock = std::chrono::steady_clock;
    const double input_bytes = static_cast<double>((stream.size() + 7) / 8);
    std::vector<BitBlock> originals = split_blocks(stream, params.block_size);

    ComparisonReport report;
    report.codec = codec;

    PipelineParams off = params;
    off.catalyst.max_runs_per_block = 0;
    auto t0 = clock::now();
    std::vector<std::uint8_t> alone = compress(stream, Mode::mode1, codec, off);
    auto t1 = clock::now();
    double ns_alone =
        static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    report.coder_alone =
        make_metrics(stream.size(), alone.size() * 8, {}, ns_alone / input_bytes);

    for (Mode mode : {Mode::mode1, Mode::mode2}) {
        auto s0 = clock::now();
        std::vector<CatalyzedBlock> blocks = catalyze_stream(stream, mode, params);
        std::vector<std::uint8_t> container =
            assemble(blocks, mode, codec, params.block_size, stream.size());
        auto s1 = clock::now();
        std::vector<double> per_block;
        per_block.reserve(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::vector<std::uint8_t> transformed = block_side_info(blocks[i]);
            std::vector<std::uint8_t> packed = blocks[i].residual.bits.pack_bytes();
            transformed.insert(transformed.end(), packed.begin(), packed.end());
            per_block.push_back(
                ccfpb_block(codec, originals[i].bits.pack_bytes(), transformed));
        }
        double ns = static_cast<double>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(s1 - s0).count());
        MetricsReport m = make_metrics(stream.size(), container.size() * 8,
                                       std::move(per_block), ns / input_bytes);
        if (mode == Mode::mode1)
            report.mode1 = std::move(m);
        else
            report.mode2 = std::move(m);
    }
    return report;
}

} // namespace bama
