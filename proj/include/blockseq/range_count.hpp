#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blockseq/sequence.hpp"

namespace blockseq {

// Static 2-D orthogonal range counter over the points (position, value) of a
// sequence: a wavelet matrix over value ranks, so every open-box count costs
// O(log n) rank queries on bit vectors.
class DominanceCounter {
 public:
  DominanceCounter() = default;
  explicit DominanceCounter(const Sequence& seq);

  std::size_t size() const { return ranks_.size(); }

  // Entries with i_lo < position < i_hi and v_lo < value < v_hi. Positions are
  // 0-based; infinite bounds are allowed. Throws InvalidInput if i_lo >= i_hi
  // or v_lo >= v_hi.
  std::size_t count_open_box(double i_lo, double i_hi, double v_lo, double v_hi) const;

  // Entries with position in [first, last) and value rank in [rank_lo, rank_hi).
  std::size_t count_ranks(std::size_t first, std::size_t last, std::size_t rank_lo,
                          std::size_t rank_hi) const;

  std::size_t rank(std::size_t position) const { return ranks_[position]; }

  // Entries strictly between positions i < j whose value lies strictly between
  // the two endpoint values.
  std::size_t gap_count(std::size_t i, std::size_t j) const;

 private:
  // Entries in positions [first, last) whose rank is below `bound`.
  std::size_t count_below(std::size_t first, std::size_t last, std::size_t bound) const;
  // Ones among the first `i` bits of level `level`.
  std::size_t rank1(std::size_t level, std::size_t i) const;

  std::vector<double> sorted_values_;
  std::vector<std::size_t> ranks_;
  std::size_t levels_ = 0;
  std::size_t words_ = 0;                // 64-bit words per level
  std::vector<std::uint64_t> bits_;      // level-major
  std::vector<std::uint32_t> prefix_;    // ones before each word, level-major
  std::vector<std::size_t> zeros_;       // zero count per level
};

// Pair (i, j), i < j, has at least s entries strictly between it in both
// position and value. Throws InvalidInput unless i < j < n.
bool is_gapped_pair(const DominanceCounter& counter, const Sequence& seq, std::size_t i,
                    std::size_t j, std::size_t s);

}  // namespace blockseq
