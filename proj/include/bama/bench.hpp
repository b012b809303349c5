#ifndef BAMA_BENCH_HPP
#define BAMA_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bama/bits.hpp"
#include "bama/pipeline.hpp"

namespace bama {

struct ReportOptions {
    char sep = ',';
    // Timing rows change between runs; everything else is deterministic, so
    // dropping them makes the report byte-stable for a fixed input.
    bool include_timing = true;
};

// One table per codec: header metric,coder_alone,mode1,mode2, then rows
// CR, CF, CP, CG, CCFPB_mean (coder_alone cell empty), then ns_per_byte.
// With several codecs each table is preceded by a "# coder=<name>" line and
// tables are separated by a blank line.
std::string bench_report(const BitVector& corpus, std::span<const Codec> codecs,
                         const PipelineParams& params, const ReportOptions& opts = {});

// One sweep point: every 1 in every block is scored as a candidate anchor
// against the original bits (no removal between anchors), and counts as
// accepted when its best run reaches min_run and passes the guard.
struct SweepPoint {
    std::int64_t min_run = 0;
    double acceptance_frequency = 0.0;  // accepted anchors per block
    double empirical_probability = 0.0; // accepted anchors / candidate anchors
};

// Tightening min_run can only shrink each anchor's accepted set, so
// acceptance_frequency is non-increasing when min_runs ascend; the evaluation
// shares one best-run scan per anchor across all points.
std::vector<SweepPoint> sweep_acceptance(const BitVector& corpus,
                                         std::span<const std::int64_t> min_runs,
                                         const PipelineParams& params);

// CSV: min_run,acceptance_frequency,empirical_probability.
std::string sweep_report(std::span<const SweepPoint> points, char sep = ',');

} // namespace bama

#endif // BAMA_BENCH_HPP
