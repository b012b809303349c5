#include "bama/bench.hpp"

#include <algorithm>
#include <cstdio>

#include "bama/errors.hpp"

namespace bama {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void append_row(std::string& out, char sep, const std::string& metric, const std::string& alone,
                const std::string& m1, const std::string& m2) {
    out += metric;
    out += sep;
    out += alone;
    out += sep;
    out += m1;
    out += sep;
    out += m2;
    out += '\n';
}

} // namespace

std::string bench_report(const BitVector& corpus, std::span<const Codec> codecs,
                         const PipelineParams& params, const ReportOptions& opts) {
    if (codecs.empty())
        throw config_error("bench needs at least one codec");
    std::string out;
    for (std::size_t i = 0; i < codecs.size(); ++i) {
        if (i > 0)
            out += '\n';
        if (codecs.size() > 1) {
            out += "# coder=";
            out += codec_name(codecs[i]);
            out += '\n';
        }
        ComparisonReport r = run_comparison(corpus, codecs[i], params);
        append_row(out, opts.sep, "metric", "coder_alone", "mode1", "mode2");
        append_row(out, opts.sep, "CR", fixed6(r.coder_alone.cr), fixed6(r.mode1.cr),
                   fixed6(r.mode2.cr));
        append_row(out, opts.sep, "CF", fixed6(r.coder_alone.cf), fixed6(r.mode1.cf),
                   fixed6(r.mode2.cf));
        append_row(out, opts.sep, "CP", fixed6(r.coder_alone.cp), fixed6(r.mode1.cp),
                   fixed6(r.mode2.cp));
        append_row(out, opts.sep, "CG", fixed6(r.coder_alone.cg), fixed6(r.mode1.cg),
                   fixed6(r.mode2.cg));
        append_row(out, opts.sep, "CCFPB_mean", "",
                   r.mode1.ccfpb_mean ? fixed6(*r.mode1.ccfpb_mean) : "",
                   r.mode2.ccfpb_mean ? fixed6(*r.mode2.ccfpb_mean) : "");
        if (opts.include_timing)
            append_row(out, opts.sep, "ns_per_byte", fixed6(r.coder_alone.ns_per_byte),
                       fixed6(r.mode1.ns_per_byte), fixed6(r.mode2.ns_per_byte));
    }
    return out;
}

std::vector<SweepPoint> sweep_acceptance(const BitVector& corpus,
                                         std::span<const std::int64_t> min_runs,
                                         const PipelineParams& params) {
    if (min_runs.empty())
        throw config_error("sweep needs at least one min_run value");
    for (std::int64_t r : min_runs)
        if (r < 3)
            throw config_error("min_run must be at least 3");
    const std::int64_t lo = *std::min_element(min_runs.begin(), min_runs.end());

    std::vector<BitBlock> blocks = split_blocks(corpus, params.block_size);
    std::vector<std::uint64_t> accepted(min_runs.size(), 0);
    std::uint64_t anchors = 0;
    for (const BitBlock& block : blocks) {
        std::vector<std::size_t> ones = block.bits.one_positions();
        BlockStats stats{static_cast<std::int64_t>(ones.size()),
                         static_cast<std::int64_t>(block.bits.size())};
        anchors += ones.size();
        for (std::size_t idx = 0; idx < ones.size(); ++idx) {
            ApRun best = best_run_at_anchor(block.bits, ones, idx, lo);
            if (best.count < lo || !guard_accepts(best, stats, params.catalyst))
                continue;
            for (std::size_t p = 0; p < min_runs.size(); ++p)
                if (best.count >= min_runs[p])
                    ++accepted[p];
        }
    }

    std::vector<SweepPoint> points(min_runs.size());
    for (std::size_t p = 0; p < min_runs.size(); ++p) {
        points[p].min_run = min_runs[p];
        points[p].acceptance_frequency =
            blocks.empty() ? 0.0
                           : static_cast<double>(accepted[p]) / static_cast<double>(blocks.size());
        points[p].empirical_probability =
            anchors == 0 ? 0.0
                         : static_cast<double>(accepted[p]) / static_cast<double>(anchors);
    }
    return points;
}

std::string sweep_report(std::span<const SweepPoint> points, char sep) {
    std::string out = "min_run";
    out += sep;
    out += "acceptance_frequency";
    out += sep;
    out += "empirical_probability\n";
    for (const SweepPoint& p : points) {
        out += std::to_string(p.min_run);
        out += sep;
        out += fixed6(p.acceptance_frequency);
        out += sep;
        out += fixed6(p.empirical_probability);
        out += '\n';
    }
    return out;
}

} // namespace bama
