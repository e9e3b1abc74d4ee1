#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "blockseq/range_count.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq {

inline constexpr double kDefaultC = 40.0;
inline constexpr std::size_t kNoPredecessor = std::numeric_limits<std::size_t>::max();

// Longest monotone chain whose consecutive entries are s-gapped.
struct GappedChain {
  Direction direction = Direction::increasing;
  std::size_t s = 0;
  std::vector<std::size_t> chain;
  std::vector<std::size_t> dp_lengths;  // longest chain ending at each position
  std::vector<std::size_t> dp_pred;     // kNoPredecessor for chain starts
};

// Exact DP. Predecessor of i is the smallest qualifying position among those
// with maximal dp_lengths; the chain ends at the smallest position of maximal
// length. `max_length` stops the scan as soon as some chain reaches it.
GappedChain gapped_chain_dp(const Sequence& seq, std::size_t s, Direction d);
GappedChain gapped_chain_dp(const DominanceCounter& counter, const Sequence& seq, std::size_t s,
                            Direction d,
                            std::size_t max_length = std::numeric_limits<std::size_t>::max());

// The s entries (smallest positions first) in each window between consecutive
// chain entries. Throws InvalidInput for chains shorter than 2 or s == 0.
BlockWitness chain_to_blocks(const Sequence& seq, const GappedChain& chain);

// Block-monotone subsequence of depth >= k. For n < (ck)^2 returns the longest
// monotone subsequence as singleton blocks; otherwise the blocks gapped by an
// s-gapped chain with s = ceil(n/(ck)^2). If no such chain of length k+1
// exists (the constant c is too small for n), the best gapped chain found by
// max_gapped_blocksize is used instead, and the monotone subsequence as a last
// resort. Throws PreconditionFailed if n <= (k-1)^2.
BlockWitness extract_block_monotone(const Sequence& seq, std::size_t k, double c = kDefaultC);

struct GappedOptimum {
  std::size_t s_star = 0;  // 0: no s >= 1 admits a chain of length k+1
  BlockWitness witness;    // depth k, block-size s_star (or the monotone fallback)
};

// Largest s for which some direction has an s-gapped chain of length k+1,
// found by binary search. Throws InvalidInput if n <= k.
GappedOptimum max_gapped_blocksize(const Sequence& seq, std::size_t k);

// Depth >= k witness covering as many entries as possible among: the full
// s*-gapped chain and the longest monotone subsequence. With `exact_depth`
// both are first coarsened to exactly k blocks. Throws PreconditionFailed if
// n <= (k-1)^2.
BlockWitness extract_largest(const Sequence& seq, std::size_t k, bool exact_depth = false);

}  // namespace blockseq
