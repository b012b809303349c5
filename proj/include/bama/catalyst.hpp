#ifndef BAMA_CATALYST_HPP
#define BAMA_CATALYST_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bama/bits.hpp"

namespace bama {

// How extracted ones leave the block during encoding.
//   mode1: each accepted run's bits are cleared immediately, so later runs
//          are found against the shrinking residual and never overlap.
//   mode2: the search always reads the original bits; accepted runs only
//          claim their positions as future anchors, and everything covered
//          is cleared at the end. Runs may overlap; decode is a set union.
enum class Mode : std::uint8_t { mode1 = 0, mode2 = 1 };

// An arithmetic-progression run of 1-bits: positions start + k*step for
// 0 <= k < count, all inside one block.
struct ApRun {
    std::int64_t count = 0;
    std::int64_t start = 0;
    std::int64_t step = 0;
    bool operator==(const ApRun&) const = default;
};

struct CatalystParams {
    std::int64_t min_run = 3;           // shortest extractable run
    bool guard = true;                  // profitability guard on accepted runs
    std::int64_t max_runs_per_block = -1; // negative = unlimited; 0 = pass-through
};

// Snapshot of the block the search currently reads.
struct BlockStats {
    std::int64_t ones = 0;
    std::int64_t length = 0;
};

// Side-info cost of a run once serialized: 8 bits per varint byte of each field.
std::int64_t serialized_bit_cost(const ApRun& run);

// A run pays for itself when its serialized side info is cheaper than the
// order-0 cost estimate of the ones it removes: count * max(1, log2(L/ones)).
// With params.guard off this always accepts.
bool guard_accepts(const ApRun& run, const BlockStats& stats, const CatalystParams& params);

// Best run anchored at ones[anchor_idx], where ones lists the 1-positions the
// search may read. Candidate steps are the distances to later ones; the scan
// prunes steps that cannot reach min_useful, so the result is exact whenever
// its count does. Callers that treat lower counts as dead lose nothing.
ApRun best_run_at_anchor(const BitVector& bits, std::span<const std::size_t> ones,
                         std::size_t anchor_idx, std::int64_t min_useful);

// Finds the next extractable run. Anchors at the first 1 not blocked by
// anchor_mask; for every later 1 at distance m it greedily extends the
// progression b, b+m, b+2m, ... while bits stay 1; keeps the candidate with
// the largest count, ties broken by the smallest step. Returns the first
// anchor whose best candidate reaches params.min_run, advancing through
// anchors until one qualifies or all are exhausted.
std::optional<ApRun> find_ap_run(const BitVector& bits, const BitVector& anchor_mask,
                                 const CatalystParams& params);

struct CatalyzedBlock {
    BitBlock residual;          // original bits with every covered position cleared
    std::vector<ApRun> runs;    // in extraction order
    Mode mode = Mode::mode1;
    std::size_t original_length = 0;
};

CatalyzedBlock catalyze_block(const BitBlock& block, Mode mode, const CatalystParams& params);

// Rebuilds the original block by setting every covered position in the
// residual. Throws corrupt_stream when a run reaches past the block or lands
// on a position the residual already has set (encoders always clear those).
BitBlock decode_block(const CatalyzedBlock& cb);

} // namespace bama

#endif // BAMA_CATALYST_HPP
