#include "bama/catalyst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bama/errors.hpp"
#include "bama/varint.hpp"

namespace bama {

namespace {

double per_one_cost(const BlockStats& stats) {
    return std::max(1.0, std::log2(static_cast<double>(stats.length) /
                                   static_cast<double>(stats.ones)));
}

// Smallest run count at anchor b that could ever pass the guard, taking the
// cheapest possible step encoding (1 byte). Rounded down so float error can
// only make the floor lenient; guard_accepts still has the final word.
std::int64_t guard_floor(std::int64_t b, const BlockStats& stats) {
    double poc = per_one_cost(stats);
    std::int64_t vb_b = static_cast<std::int64_t>(varint_size(static_cast<std::uint64_t>(b)));
    std::int64_t range_lo = 0;
    for (std::int64_t w = 1; w <= 10; ++w) {
        std::int64_t range_hi = (w == 10) ? std::numeric_limits<std::int64_t>::max()
                                          : (std::int64_t{1} << (7 * w)) - 1;
        double cost = 8.0 * static_cast<double>(w + vb_b + 1);
        std::int64_t a_min = std::max<std::int64_t>(
            {1, range_lo, static_cast<std::int64_t>(std::floor(cost / poc))});
        if (a_min <= range_hi)
            return a_min;
        range_lo = range_hi + 1;
    }
    return std::numeric_limits<std::int64_t>::max();
}

void clear_run(BitVector& bits, const ApRun& run) {
    for (std::int64_t k = 0; k < run.count; ++k)
        bits.set(static_cast<std::size_t>(run.start + k * run.step), false);
}

void mask_run(BitVector& mask, const ApRun& run) {
    for (std::int64_t k = 0; k < run.count; ++k)
        mask.set(static_cast<std::size_t>(run.start + k * run.step), true);
}

} // namespace

// Candidate steps are the distances to later 1s, scanned in increasing order;
// a step can be ruled out once even a run filling the rest of the block,
// floor((L-1-b)/m)+1 positions, cannot beat the current best or reach
// min_useful. Both bounds shrink the scan window without changing the winner:
// a skipped step can never hold the returned run.
ApRun best_run_at_anchor(const BitVector& bits, std::span<const std::size_t> ones,
                         std::size_t anchor_idx, std::int64_t min_useful) {
    const std::int64_t L = static_cast<std::int64_t>(bits.size());
    const std::int64_t b = static_cast<std::int64_t>(ones[anchor_idx]);
    ApRun best{1, b, 0};
    std::int64_t threshold = std::max<std::int64_t>(best.count, min_useful - 1);
    for (std::size_t j = anchor_idx + 1; j < ones.size(); ++j) {
        std::int64_t q = static_cast<std::int64_t>(ones[j]);
        if (!bits.get(static_cast<std::size_t>(q)))
            continue; // removed by an earlier mode-1 extraction
        std::int64_t m = q - b;
        if ((L - 1 - b) / m + 1 <= threshold)
            break; // larger steps fit even fewer positions
        std::int64_t c = 2;
        for (std::int64_t pos = q + m; pos < L && bits.get(static_cast<std::size_t>(pos)); pos += m)
            ++c;
        if (c > best.count) {
            best = ApRun{c, b, m};
            threshold = std::max(threshold, c);
        }
    }
    return best;
}

std::int64_t serialized_bit_cost(const ApRun& run) {
    return 8 * static_cast<std::int64_t>(varint_size(static_cast<std::uint64_t>(run.count)) +
                                         varint_size(static_cast<std::uint64_t>(run.start)) +
                                         varint_size(static_cast<std::uint64_t>(run.step)));
}

bool guard_accepts(const ApRun& run, const BlockStats& stats, const CatalystParams& params) {
    if (!params.guard)
        return true;
    return static_cast<double>(serialized_bit_cost(run)) <
           static_cast<double>(run.count) * per_one_cost(stats);
}

std::optional<ApRun> find_ap_run(const BitVector& bits, const BitVector& anchor_mask,
                                 const CatalystParams& params) {
    if (params.min_run < 3)
        throw config_error("min_run must be at least 3");
    assert(anchor_mask.size() == bits.size());
    std::vector<std::size_t> ones = bits.one_positions();
    for (std::size_t idx = 0; idx < ones.size(); ++idx) {
        if (anchor_mask.get(ones[idx]))
            continue;
        ApRun best = best_run_at_anchor(bits, ones, idx, params.min_run);
        if (best.count >= params.min_run)
            return best;
    }
    return std::nullopt;
}

CatalyzedBlock catalyze_block(const BitBlock& block, Mode mode, const CatalystParams& params) {
    // A run needs a first, second, and third 1: anything shorter is never
    // extracted (min_run 1 would even emit step-0 triples the container
    // format rejects).
    if (params.min_run < 3)
        throw config_error("min_run must be at least 3");
    const std::size_t L = block.bits.size();
    CatalyzedBlock out;
    out.mode = mode;
    out.original_length = L;
    out.residual = block;

    std::size_t max_runs = params.max_runs_per_block < 0
                               ? std::numeric_limits<std::size_t>::max()
                               : static_cast<std::size_t>(params.max_runs_per_block);
    if (L == 0 || max_runs == 0)
        return out;

    std::vector<std::size_t> ones = block.bits.one_positions();
    BlockStats stats{static_cast<std::int64_t>(ones.size()), static_cast<std::int64_t>(L)};

    BitVector work;                 // mode 1: the shrinking residual the search reads
    const BitVector* search = &block.bits;
    if (mode == Mode::mode1) {
        work = block.bits;
        search = &work;
    }
    BitVector covered(L);           // mode 2: union of accepted runs
    BitVector dead(L);              // guard-rejected anchors, plus mode-2 claims

    std::size_t idx = 0;
    while (out.runs.size() < max_runs) {
        while (idx < ones.size() &&
               (dead.get(ones[idx]) || (mode == Mode::mode1 && !work.get(ones[idx]))))
            ++idx;
        if (idx == ones.size())
            break;
        std::int64_t b = static_cast<std::int64_t>(ones[idx]);
        std::int64_t min_useful = params.min_run;
        if (params.guard)
            min_useful = std::max(min_useful, guard_floor(b, stats));
        ApRun best = best_run_at_anchor(*search, ones, idx, min_useful);
        if (best.count >= min_useful && guard_accepts(best, stats, params)) {
            out.runs.push_back(best);
            if (mode == Mode::mode1) {
                clear_run(work, best);
                stats.ones -= best.count;
            } else {
                mask_run(covered, best);
                mask_run(dead, best);
            }
        } else {
            dead.set(static_cast<std::size_t>(b), true);
        }
    }

    if (mode == Mode::mode1) {
        out.residual.bits = work;
    } else {
        BitVector resid = block.bits;
        for (std::size_t p : covered.one_positions())
            resid.set(p, false);
        out.residual.bits = resid;
    }
    return out;
}

BitBlock decode_block(const CatalyzedBlock& cb) {
    const std::int64_t L = static_cast<std::int64_t>(cb.original_length);
    if (cb.residual.bits.size() != cb.original_length)
        throw corrupt_stream("decode_block: residual length mismatch");
    BitBlock out = cb.residual;
    for (const ApRun& run : cb.runs) {
        if (run.count < 1 || run.step < 1 || run.start < 0)
            throw corrupt_stream("decode_block: malformed run triple");
        // pos accumulates instead of multiplying so oversized triples hit the
        // range check before any signed overflow.
        std::uint64_t pos = static_cast<std::uint64_t>(run.start);
        for (std::int64_t k = 0; k < run.count; ++k, pos += static_cast<std::uint64_t>(run.step)) {
            if (pos >= static_cast<std::uint64_t>(L))
                throw corrupt_stream("decode_block: run reaches past block end");
            // Overlap between runs is legal (mode 2 decodes as a union), but a
            // covered position set in the shipped residual proves corruption.
            if (cb.residual.bits.get(static_cast<std::size_t>(pos)))
                throw corrupt_stream("decode_block: covered position already set in residual");
            out.bits.set(static_cast<std::size_t>(pos), true);
        }
    }
    return out;
}

} // namespace bama
