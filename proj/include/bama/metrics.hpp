#ifndef BAMA_METRICS_HPP
#define BAMA_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bama/codec.hpp"

namespace bama {

// Size-based quality figures for one compression run. All four scalar
// figures derive from the same pair of bit counts; ccfpb is per block and
// needs the codec to price each block twice.
struct MetricsReport {
    std::uint64_t input_bits = 0;
    std::uint64_t output_bits = 0;
    double cr = 0.0; // output / input
    double cf = 0.0; // input / output
    double cp = 0.0; // percent saved
    double cg = 0.0; // 100 * ln(input / output)
    std::vector<double> ccfpb_per_block;
    std::optional<double> ccfpb_mean;
    std::size_t nb = 0; // block count behind ccfpb
    double ns_per_byte = 0.0;
};

// output/input. input_bits of zero has no ratio.
double compression_ratio(std::uint64_t output_bits, std::uint64_t input_bits);

// 1/cr, cr of zero has no factor.
double compression_factor(double cr);

// 100 * (1 - cr).
double compression_percent(double cr);

// 100 * ln(size_ratio), the logarithmic gain of shrinking by size_ratio.
double compression_gain(double size_ratio);

// Same, from the two sizes; both must be positive.
double compression_gain(std::uint64_t reference_bits, std::uint64_t compressed_bits);

// Per-block coding gain of a transform: bits the codec spends on the block
// as captured versus bits it spends on the transformed form of the same
// block. Values above 1 mean the transform helped this codec.
double ccfpb_block(Codec codec, std::span<const std::uint8_t> original,
                   std::span<const std::uint8_t> transformed);

// Arithmetic mean, undefined on an empty sample.
double mean(std::span<const double> values);

// Bundles the scalar figures for a (input, output) pair. ccfpb fields stay
// empty when per_block is empty: a run without blocks has no per-block mean.
MetricsReport make_metrics(std::uint64_t input_bits, std::uint64_t output_bits,
                           std::vector<double> per_block = {}, double ns_per_byte = 0.0);

} // namespace bama

#endif // BAMA_METRICS_HPP
