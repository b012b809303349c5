#include "bama/metrics.hpp"

#include <cmath>

#include "bama/errors.hpp"

namespace bama {

double compression_ratio(std::uint64_t output_bits, std::uint64_t input_bits) {
    if (input_bits == 0)
        throw undefined_ratio("compression ratio of an empty input");
    return static_cast<double>(output_bits) / static_cast<double>(input_bits);
}

double compression_factor(double cr) {
    if (cr <= 0.0)
        throw undefined_ratio("compression factor of a non-positive ratio");
    return 1.0 / cr;
}

double compression_percent(double cr) {
    return 100.0 * (1.0 - cr);
}

double compression_gain(double size_ratio) {
    if (size_ratio <= 0.0)
        throw undefined_ratio("compression gain of a non-positive ratio");
    return 100.0 * std::log(size_ratio);
}

double compression_gain(std::uint64_t reference_bits, std::uint64_t compressed_bits) {
    if (reference_bits == 0 || compressed_bits == 0)
        throw undefined_ratio("compression gain of a zero size");
    return compression_gain(static_cast<double>(reference_bits) /
                            static_cast<double>(compressed_bits));
}

double ccfpb_block(Codec codec, std::span<const std::uint8_t> original,
                   std::span<const std::uint8_t> transformed) {
    std::uint64_t plain = coded_size_bits(codec, original);
    std::uint64_t treated = coded_size_bits(codec, transformed);
    if (treated == 0)
        throw undefined_ratio("coded block of zero size");
    return static_cast<double>(plain) / static_cast<double>(treated);
}

double mean(std::span<const double> values) {
    if (values.empty())
        throw undefined_mean("mean of an empty sample");
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

MetricsReport make_metrics(std::uint64_t input_bits, std::uint64_t output_bits,
                           std::vector<double> per_block, double ns_per_byte) {
    MetricsReport r;
    r.input_bits = input_bits;
    r.output_bits = output_bits;
    r.cr = compression_ratio(output_bits, input_bits);
    r.cf = compression_factor(r.cr);
    r.cp = compression_percent(r.cr);
    r.cg = compression_gain(r.cf);
    r.nb = per_block.size();
    if (!per_block.empty())
        r.ccfpb_mean = mean(per_block);
    r.ccfpb_per_block = std::move(per_block);
    r.ns_per_byte = ns_per_byte;
    return r;
}

} // namespace bama
